import json
from fractions import Fraction

import pytest

from qhecke import InsufficientPrecision, PlusSpaceSeq, QSeries, delta, \
    eisenstein, hecke_add, hecke_add_relation_check, hecke_half, \
    hecke_half_composite, legendre, sigma
from qhecke.errors import NotOddPrime

Q = Fraction

TAU = [0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


def test_legendre():
    assert [legendre(n, 7) for n in range(7)] == [0, 1, 1, -1, 1, -1, -1]
    assert legendre(2, 17) == 1
    assert legendre(3, 17) == -1


def test_delta_is_additive_eigenform():
    f = delta(10 * 25 + 1)
    for n in range(1, 11):
        lhs = hecke_add(f, 12, 1, n, prec=25)
        assert lhs.agrees(f.truncate(25).scale(TAU[n]), upto=25), n


def test_e2_quasi_eigenform():
    e2 = eisenstein(2, 200)
    for n in range(1, 11):
        lhs = hecke_add(e2, 2, 1, n, prec=19)
        assert lhs.agrees(e2.truncate(19).scale(sigma(n)), upto=19), n


def test_additive_relation():
    f = delta(24 * 14 + 2)
    assert hecke_add_relation_check(12, 1, 2, 6, f, 15)
    assert hecke_add_relation_check(12, 1, 4, 6, f, 15)
    e4 = eisenstein(4, 12 * 14 + 2)
    assert hecke_add_relation_check(4, 1, 3, 4, e4, 15)


def test_hecke_add_guards():
    f = delta(10)
    with pytest.raises(InsufficientPrecision):
        hecke_add(f, 12, 1, 3, prec=10)
    j_like = QSeries(-1, [1, 0, 1], prec=2)
    with pytest.raises(ValueError):
        hecke_add(j_like, 0, 1, 2)


def test_plus_space_basic():
    f = PlusSpaceSeq({-3: 1, 0: 4, 1: Q(1, 2)}, 50)
    assert f[-3] == 1 and f[4] == 0
    with pytest.raises(InsufficientPrecision):
        f[50]
    with pytest.raises(ValueError):
        PlusSpaceSeq({2: 1}, 10)  # 2 mod 4 violates the plus condition
    data = json.loads(json.dumps(f.to_json()))
    assert PlusSpaceSeq.from_json(data).agrees(f)


def test_half_integral_requires_odd_prime():
    f = PlusSpaceSeq({0: 1}, 100)
    with pytest.raises(NotOddPrime):
        hecke_half(f, 2)
    with pytest.raises(NotOddPrime):
        hecke_half(f, 9)


def test_half_integral_on_principal_part():
    # (f|T(9))(n) picks up a(9n), (n|3)a(n)/3 and a(n/9)/3
    f = PlusSpaceSeq({-3: 1, 0: 4}, 200)
    g = hecke_half(f, 3)
    assert g[-27] == Q(1, 3)   # from a(-27/9) = a(-3)
    assert g[-3] == 0          # a(-27) = 0 and (-3|3) = 0
    assert g[0] == Q(16, 3)    # a(0) + a(0)/3


def test_half_integral_composite_consistency():
    # T(9)T(25) = T(25)T(9) = T(225) for coprime odd primes
    f = PlusSpaceSeq({-4: 1, 0: 2, 5: 7, 8: -3, 12: 5, 45: 11, 200: 1,
                      1800: 4}, 2000)
    a = hecke_half(hecke_half(f, 3), 5)
    b = hecke_half(hecke_half(f, 5), 3)
    c = hecke_half_composite(f, 15)
    assert a.agrees(b) and a.agrees(c)


def test_half_integral_power_recursion():
    # T(81) = T(9)T(9) - (1/3) T(1) termwise on sparse data
    f = PlusSpaceSeq({0: 1, 4: 2, 9: -1, 36: 5, 81: 7, 324: -2}, 400)
    lhs = hecke_half(f, 3, 2)
    rhs = hecke_half(hecke_half(f, 3), 3).add(f.scale(Q(-1, 3)))
    assert lhs.agrees(rhs, upto=min(lhs.prec, rhs.prec))
