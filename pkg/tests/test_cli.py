import json

from qhecke import PlusSpaceSeq
from qhecke.cli import run


def test_expand_named_form(capsys):
    assert run(["expand", "--form", "E4", "--prec", "4", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coeffs"] == ["1", "240", "2160", "6720"]


def test_expand_j(capsys):
    assert run(["expand", "--form", "j", "--prec", "2", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["valuation"] == -1 and out["coeffs"][:2] == ["1", "744"]


def test_to_product_and_back(tmp_path, capsys):
    assert run(["to-product", "--form", "E4", "--prec", "6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exponents"][:2] == ["-240", "26760"]
    path = tmp_path / "e4.json"
    path.write_text(json.dumps(data))
    assert run(["to-fourier", "--input", str(path), "--prec", "4",
                "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coeffs"] == ["1", "240", "2160", "6720"]


def test_hecke_mult_delta(capsys):
    assert run(["hecke-mult", "--form", "delta", "--n", "2", "--prec", "5",
                "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 3 and out["weight"] == "36"
    assert all(c == "72" for c in out["exponents"])


def test_hecke_add_weight_required(capsys):
    assert run(["hecke-add", "--form", "delta", "--n", "2"]) == 2


def test_hecke_add_delta(capsys):
    assert run(["hecke-add", "--form", "delta", "--weight", "12",
                "--n", "2", "--prec", "4", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    # tau(2) Delta = -24 q + 576 q^2 - ...
    assert out["coeffs"][:2] == ["-24", "576"]


def test_hecke_half_and_borcherds(tmp_path, capsys):
    path = tmp_path / "plus.json"
    path.write_text(json.dumps(PlusSpaceSeq({-3: 3}, 200).to_json()))
    assert run(["hecke-half", "--input", str(path), "--n", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coeffs"]["-27"] == "3"
    assert run(["borcherds", "--input", str(path), "--prec", "5",
                "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == -1 and out["weight"] == "0"


def test_hurwitz(capsys):
    assert run(["hurwitz", "--max", "4"]) == 0
    assert json.loads(capsys.readouterr().out) == \
        ["-1/12", "0", "0", "1/3", "1/2"]


def test_eigen(capsys):
    assert run(["eigen", "--form", "delta", "--prec", "40",
                "--primes", "2,3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["is_eigenform"] and out["lambda"] == {"2": 3, "3": 4}


def test_recognize(tmp_path, capsys):
    assert run(["to-product", "--form", "delta", "--prec", "20",
                "--json"]) == 0
    path = tmp_path / "d.json"
    path.write_text(capsys.readouterr().out)
    assert run(["recognize", "--input", str(path), "--level", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["eta_quotient"]["exponents"] == {"1": 24}


def test_verify_suite(capsys):
    assert run(["verify", "sigma", "--max", "30"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_unknown_suite(capsys):
    assert run(["verify", "nope"]) == 2


def test_usage_errors(capsys):
    assert run(["expand"]) == 2            # no form, no input
    assert run(["expand", "--form", "zeta"]) == 2
    assert run(["expand", "--input", "/nonexistent.json"]) == 2
    assert run(["not-a-command"]) == 2
