"""Command-line front end.

Form mini-language accepted by --form:
    E2 | E4 | E6 | delta | j
    etaq N d1:r1,d2:r2,...        (eta quotient of level N)

Exit codes: 0 success / verified, 1 verification failure (first
discrepancy on stderr), 2 usage or precision errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .borcherds import borcherds_lift, hurwitz
from .classical import EtaQuotient, delta, delta_product, eisenstein, \
    eta_quotient, j_invariant, newman_check
from .errors import QheckeError
from .heckeadd import PlusSpaceSeq, hecke_add, hecke_half_composite
from .heckemult import mult_hecke
from .prodform import ProductForm, fourier_to_product, product_to_fourier
from .qseries import FormMeta, QSeries
from .structure import eta_recognize, is_mult_eigenform

DEFAULT_PREC = 40

_NAMED_META = {
    "E4": FormMeta(4, 1, 0),
    "E6": FormMeta(6, 1, 0),
    "delta": FormMeta(12, 1, 1),
    "j": FormMeta(0, 1, -1),
}


class UsageError(Exception):
    pass


def parse_etaq(parts: list[str]) -> EtaQuotient:
    if len(parts) != 2:
        raise UsageError("etaq needs a level and divisor:exponent pairs")
    level = int(parts[0])
    exps = {}
    for item in parts[1].split(","):
        d, _, r = item.partition(":")
        exps[int(d)] = int(r)
    return EtaQuotient(level, exps)


def form_series(spec: str, prec: int) -> QSeries:
    if not spec:
        raise UsageError("no form given: use --form or --input")
    parts = spec.split()
    name = parts[0]
    if name in ("E2", "E4", "E6"):
        return eisenstein(int(name[1]), prec)
    if name == "delta":
        return delta(prec)
    if name == "j":
        return j_invariant(prec)
    if name == "etaq":
        eq = parse_etaq(parts[1:])
        return product_to_fourier(eta_quotient(eq, prec + 2),
                                  eq.meta().order + prec)
    raise UsageError(f"unknown form {spec!r}")


def form_product(spec: str, prec: int) -> tuple[ProductForm, FormMeta]:
    if not spec:
        raise UsageError("no form given: use --form")
    parts = spec.split()
    name = parts[0]
    if name in _NAMED_META:
        meta = _NAMED_META[name]
        if name == "delta":
            return delta_product(prec), meta
        series = form_series(spec, meta.order + prec)
        return fourier_to_product(series), meta
    if name == "etaq":
        eq = parse_etaq(parts[1:])
        return eta_quotient(eq, prec), eq.meta()
    raise UsageError(f"form {spec!r} has no product representation")


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def emit(data, as_json: bool):
    if as_json:
        print(json.dumps(data, indent=2))
        return
    if isinstance(data, dict) and "coeffs" in data and "valuation" in data:
        for i, c in enumerate(data["coeffs"]):
            print(f"q^{data['valuation'] + i}: {c}")
    elif isinstance(data, dict) and "exponents" in data:
        print(f"order: {data['order']}")
        for i, c in enumerate(data["exponents"], start=1):
            print(f"c({i}): {c}")
    else:
        print(json.dumps(data, indent=2))


def cmd_expand(args) -> int:
    if args.input:
        data = load_json(args.input)
        series = (product_to_fourier(ProductForm.from_json(data), args.prec)
                  if "exponents" in data else QSeries.from_json(data))
    else:
        series = form_series(args.form, args.prec)
    emit(series.to_json(), args.json)
    return 0


def cmd_to_product(args) -> int:
    if args.input:
        series = QSeries.from_json(load_json(args.input))
    else:
        series = form_series(args.form, args.prec)
    if args.normalize and not series.is_zero:
        series = series.scale(1 / series[series.valuation])
    emit(fourier_to_product(series).to_json(), args.json)
    return 0


def cmd_to_fourier(args) -> int:
    pf = ProductForm.from_json(load_json(args.input))
    emit(product_to_fourier(pf, pf.order + args.prec).to_json(), args.json)
    return 0


def cmd_hecke_mult(args) -> int:
    pf, meta = form_product(args.form, args.n * (args.prec - 1) + 2)
    if args.level is not None or args.weight is not None:
        meta = FormMeta(
            weight=Fraction(args.weight) if args.weight else meta.weight,
            level=args.level if args.level else meta.level,
            order=meta.order)
    res = mult_hecke(pf, meta, args.n, prec=args.prec)
    out = res.form.to_json()
    out["weight"] = str(res.meta.weight)
    out["level"] = res.meta.level
    emit(out, args.json)
    return 0


def cmd_hecke_add(args) -> int:
    if args.weight is None:
        raise UsageError("hecke-add needs --weight")
    series = (QSeries.from_json(load_json(args.input)) if args.input
              else form_series(args.form, args.n * (args.prec - 1) + 1))
    level = args.level or 1
    res = hecke_add(series, args.weight, level, args.n, prec=args.prec)
    emit(res.to_json(), args.json)
    return 0


def cmd_hecke_half(args) -> int:
    f = PlusSpaceSeq.from_json(load_json(args.input))
    res = hecke_half_composite(f, args.n).scale(args.n)
    emit(res.to_json(), args.json)
    return 0


def cmd_hurwitz(args) -> int:
    bound = args.max if args.max is not None else 100
    values = [str(hurwitz(n)) for n in range(bound + 1)]
    print(json.dumps(values))
    return 0


def cmd_borcherds(args) -> int:
    f = PlusSpaceSeq.from_json(load_json(args.input))
    pf, meta = borcherds_lift(f, args.prec)
    out = pf.to_json()
    out["weight"] = str(meta.weight)
    emit(out, args.json)
    return 0


def cmd_eigen(args) -> int:
    level = args.level or 1
    prec = args.prec
    primes = [int(p) for p in args.primes.split(",")]
    pf, meta = form_product(args.form, prec) if not args.input else (
        ProductForm.from_json(load_json(args.input)), None)
    report = is_mult_eigenform(pf, level, primes, prec=prec)
    out = {
        "is_eigenform": report.is_eigenform,
        "tested_primes": list(report.tested_primes),
        "lambda": {str(p): v for p, v in report.lam.items()},
        "first_violation": report.first_violation,
        "prec": min(prec, pf.prec),
    }
    emit(out, True)
    return 0


def cmd_recognize(args) -> int:
    pf = ProductForm.from_json(load_json(args.input))
    level = args.level or 1
    quotient, witness = eta_recognize(pf, level)
    if quotient is None:
        emit({"eta_quotient": None, "first_violation": witness}, True)
        return 1
    out = {
        "eta_quotient": {"level": quotient.level,
                         "exponents": {str(d): r
                                       for d, r in quotient.exps.items()}},
        "newman": newman_check(quotient),
        "weight": str(quotient.weight),
        "order": str(quotient.order),
    }
    emit(out, True)
    return 0


def cmd_verify(args) -> int:
    suite = verify.SUITES.get(args.suite)
    if suite is None:
        raise UsageError(f"unknown suite {args.suite!r}; "
                         f"choose from {sorted(verify.SUITES)}")
    kwargs = {}
    if args.suite == "sigma":
        kwargs["max_n"] = args.max or 200
    elif args.suite == "borcherds-equivariance":
        kwargs = {"n": args.n or 3, "case": args.case,
                  "prec": args.prec or 30}
    elif args.suite == "hurwitz":
        kwargs["bound"] = args.max or 500
    elif args.suite == "algebra":
        kwargs = {"prec": args.prec or 20, "max_mn": args.max or 8}
    elif args.suite in ("e4-t3", "j-t3", "logderiv"):
        kwargs["prec"] = args.prec or 40
    ok, lines = suite(**kwargs)
    for line in lines:
        print(line if ok else line, file=sys.stdout if ok else sys.stderr)
    print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhecke",
        description="Exact multiplicative/additive Hecke operators on "
                    "q-expansions and infinite-product forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prec_default=DEFAULT_PREC):
        p.add_argument("--form")
        p.add_argument("--input")
        p.add_argument("--level", type=int)
        p.add_argument("--weight", type=int)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--m", type=int)
        p.add_argument("--prec", type=int, default=prec_default)
        p.add_argument("--primes", default="2,3,5")
        p.add_argument("--json", action="store_true")
        p.add_argument("--normalize", action="store_true")
        p.add_argument("--max", type=int)

    for name, fn in [
        ("expand", cmd_expand), ("to-product", cmd_to_product),
        ("to-fourier", cmd_to_fourier), ("hecke-mult", cmd_hecke_mult),
        ("hecke-add", cmd_hecke_add), ("hecke-half", cmd_hecke_half),
        ("hurwitz", cmd_hurwitz), ("borcherds", cmd_borcherds),
        ("eigen", cmd_eigen), ("recognize", cmd_recognize),
    ]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=fn)

    pv = sub.add_parser("verify")
    pv.add_argument("suite")
    pv.add_argument("--case", default="e4", choices=["e4", "j"])
    common(pv, prec_default=None)
    pv.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QheckeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
