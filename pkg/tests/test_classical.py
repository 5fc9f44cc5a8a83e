from fractions import Fraction

import pytest

from qhecke import EtaQuotient, delta, delta_product, eisenstein, \
    eta_quotient, j_invariant, newman_check, product_to_fourier, sigma
from qhecke.classical import divisors
from qhecke.errors import NonIntegralOrder, UnsupportedWeight

Q = Fraction


def test_divisors_and_sigma():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert sigma(12) == 28
    assert sigma(6, 3) == 1 + 8 + 27 + 216


def test_eisenstein_coefficients():
    e2 = eisenstein(2, 4)
    assert [e2[n] for n in range(4)] == [1, -24, -72, -96]
    e4 = eisenstein(4, 4)
    assert [e4[n] for n in range(4)] == [1, 240, 2160, 6720]
    e6 = eisenstein(6, 3)
    assert [e6[n] for n in range(3)] == [1, -504, -16632]
    with pytest.raises(UnsupportedWeight):
        eisenstein(8, 5)


def test_delta_tau_values():
    d = delta(7)
    assert [d[n] for n in range(1, 7)] == [1, -24, 252, -1472, 4830, -6048]


def test_j_expansion():
    j = j_invariant(3)
    assert j.valuation == -1
    assert j[-1] == 1 and j[0] == 744 and j[1] == 196884 and j[2] == 21493760


def test_j_times_delta_is_e4_cubed():
    prec = 25
    lhs = j_invariant(prec).mul(delta(prec + 2))
    rhs = eisenstein(4, prec).pow_int(3)
    assert lhs.agrees(rhs, upto=prec)


def test_delta_as_eta_power():
    # Delta = eta(tau)^24
    eq = EtaQuotient(1, {1: 24})
    assert eq.weight == 12 and eq.order == 1
    assert eta_quotient(eq, 20).agrees(delta_product(20))
    assert newman_check(eq)


def test_eta_quotient_example():
    # eta(4t)^8 / eta(2t)^4 = sum sigma(2n+1) q^{2n+1}
    eq = EtaQuotient(4, {2: -4, 4: 8})
    assert eq.weight == 2 and eq.order == 1
    assert newman_check(eq)
    f = product_to_fourier(eta_quotient(eq, 41), 40)
    for n in range(1, 40):
        assert f[n] == (sigma(n) if n % 2 else 0)


def test_eta_quotient_order_must_be_integral():
    eq = EtaQuotient(6, {1: 1, 2: -1, 3: -1, 6: 1})
    with pytest.raises(NonIntegralOrder):
        eq.meta()


def test_eta_quotient_bad_divisor():
    with pytest.raises(ValueError):
        EtaQuotient(4, {3: 1})
