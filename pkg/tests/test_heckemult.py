from fractions import Fraction

import pytest

from qhecke import EtaQuotient, FormMeta, InsufficientPrecision, \
    ProductForm, QSeries, congruence_check, delta, delta_product, \
    eisenstein, eta_quotient, fourier_to_product, mult_hecke, \
    mult_hecke_prime_power, product_to_fourier, verify_algebra_relation
from qhecke.errors import NotPrime
from qhecke.heckemult import c_hat, chi_triv, factorize, is_prime
from qhecke.qseries import exp_series, log_series

Q = Fraction

DELTA_META = FormMeta(12, 1, 1)


def test_number_theory_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert chi_triv(4, 3) == 1 and chi_triv(4, 6) == 0 and chi_triv(1, 5) == 1
    c = lambda n: Q(10 * n)
    assert c_hat(c, 3, 4, 2) == Q(60)
    assert c_hat(c, 3, 4, 8) == 0


def test_delta_t2_is_delta_cubed():
    pf = delta_product(40)
    res = mult_hecke(pf, DELTA_META, 2, prec=20)
    assert res.meta.weight == 36 and res.meta.order == 3
    assert res.form.agrees(delta_product(20).pow(3), upto=20)


def test_weight_and_order_lift():
    pf = delta_product(200)
    res = mult_hecke(pf, DELTA_META, 6, prec=20)
    # sigma(6) = 12 multiplies both weight and order at level 1
    assert res.meta.weight == 12 * 12 and res.meta.order == 12
    eq = EtaQuotient(4, {2: -4, 4: 8})
    res = mult_hecke(eta_quotient(eq, 100), eq.meta(), 2, prec=20)
    # p | N: weight times p, order unchanged
    assert res.meta.weight == 4 and res.meta.order == 1


def slash_product_oracle(f: QSeries, p: int) -> QSeries:
    """f(p tau) * prod_{b mod p} f((tau+b)/p), with leading coefficient
    normalized to 1: q^{h(p+1)} u(q^p) exp(p sum_m L(pm) q^m), L = log u."""
    h = f.valuation
    t = f.prec - h
    u = QSeries(0, list(f.coeffs), prec=t)
    lg = log_series(u)
    tp = (t - 1) // p + 1
    lp = [p * lg[p * m] for m in range(tp)]
    gp = exp_series(QSeries(0, lp, prec=tp) if any(lp)
                    else QSeries.zero(tp))
    unit = u.rescale_q(p).mul(gp)
    return QSeries(h * (p + 1), list(unit.coeffs), prec=h * (p + 1) + tp)


@pytest.mark.parametrize("p", [2, 3])
def test_slash_product_oracle_delta(p):
    f = delta(80)
    res = mult_hecke(fourier_to_product(f), DELTA_META, p, prec=20)
    lhs = product_to_fourier(res.form, res.form.order + 20)
    assert lhs.agrees(slash_product_oracle(f, p), upto=res.form.order + 20)


@pytest.mark.parametrize("p", [2, 3])
def test_slash_product_oracle_e4(p):
    f = eisenstein(4, 80)
    res = mult_hecke(fourier_to_product(f), FormMeta(4, 1, 0), p, prec=20)
    lhs = product_to_fourier(res.form, res.form.order + 20)
    assert lhs.agrees(slash_product_oracle(f, p), upto=res.form.order + 20)


def test_commutativity_up_to_12():
    prec = 6
    pf = delta_product(144 * (prec - 1) + 2)
    for m in range(2, 13):
        for n in range(m + 1, 13):
            a = mult_hecke(pf, DELTA_META, m, prec=n * (prec - 1) + 1)
            a = mult_hecke(a.form, a.meta, n, prec=prec)
            b = mult_hecke(pf, DELTA_META, n, prec=m * (prec - 1) + 1)
            b = mult_hecke(b.form, b.meta, m, prec=prec)
            assert a.meta == b.meta
            assert a.form.agrees(b.form, upto=prec), (m, n)


def test_bad_prime_absorption():
    # p | N: T(p^r) T(p^s) = T(p^{r+s})
    eq = EtaQuotient(4, {2: -4, 4: 8})
    prec = 10
    pf = eta_quotient(eq, 16 * (prec - 1) + 2)
    meta = eq.meta()
    for r in (1, 2):
        for s in (1, 2):
            a = mult_hecke_prime_power(pf, meta, 2, r,
                                       prec=2 ** s * (prec - 1) + 1)
            a = mult_hecke_prime_power(a.form, a.meta, 2, s, prec=prec)
            b = mult_hecke_prime_power(pf, meta, 2, r + s, prec=prec)
            assert a.meta == b.meta
            assert a.form.agrees(b.form, upto=prec), (r, s)


def test_algebra_relation_small():
    pf = delta_product(36 * 9 + 2)
    ok, witness = verify_algebra_relation(pf, DELTA_META, 4, 6, 10)
    assert ok and witness is None


def test_congruence_small():
    pf = delta_product(200)
    assert congruence_check(pf, DELTA_META, 5, 1, 20)


def test_precision_errors():
    pf = delta_product(10)
    with pytest.raises(InsufficientPrecision):
        mult_hecke(pf, DELTA_META, 3, prec=10)
    with pytest.raises(NotPrime):
        mult_hecke_prime_power(pf, DELTA_META, 6, 1, prec=2)


def test_identity_operator():
    pf = delta_product(10)
    res = mult_hecke(pf, DELTA_META, 1, prec=8)
    assert res.form.agrees(pf, upto=8) and res.meta == DELTA_META
