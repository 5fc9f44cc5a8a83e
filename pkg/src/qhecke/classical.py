"""Classical constructors: divisor sums, Eisenstein series, Delta, j,
and general eta quotients with Newman's congruence conditions.

The eta function never appears as a fractional-power series: eta quotients
are represented directly through their product exponents, with the q^{1/24}
prefactors aggregated into the integer leading order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegralOrder, UnsupportedWeight
from .prodform import ProductForm, product_to_fourier
from .qseries import FormMeta, QSeries

Q = Fraction


def divisors(n: int) -> list[int]:
    ds = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            ds.append(i)
            if i != n // i:
                ds.append(n // i)
        i += 1
    return sorted(ds)


def sigma(n: int, k: int = 1) -> int:
    """Divisor power sum sigma_k(n) = sum_{d|n} d^k."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    return sum(d ** k for d in divisors(n))


_EISENSTEIN = {2: -24, 4: 240, 6: -504}
_EISENSTEIN_POW = {2: 1, 4: 3, 6: 5}


def eisenstein(k: int, prec: int) -> QSeries:
    """E_2, E_4 or E_6 normalized with constant term 1."""
    if k not in _EISENSTEIN:
        raise UnsupportedWeight(f"no Eisenstein series of weight {k}")
    mult, kk = _EISENSTEIN[k], _EISENSTEIN_POW[k]
    coeffs = [Q(1)] + [Q(mult * sigma(n, kk)) for n in range(1, prec)]
    return QSeries(0, coeffs, prec=prec)


def delta_product(prec: int) -> ProductForm:
    """Delta as a product form: order 1, every exponent 24."""
    return ProductForm.constant_exponents(1, 24, prec)


def delta(prec: int) -> QSeries:
    return product_to_fourier(delta_product(prec), prec)


def j_invariant(prec: int) -> QSeries:
    """j = E_4^3 / Delta = q^{-1} + 744 + 196884 q + ..."""
    pad = prec + 2
    e4 = eisenstein(4, pad)
    return e4.pow_int(3).mul(delta(pad + 2).inv()).truncate(prec)


@dataclass(frozen=True)
class EtaQuotient:
    """prod_{delta | N} eta(delta tau)^{r_delta}."""

    level: int
    exps: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        for d in self.exps:
            if self.level % d != 0:
                raise ValueError(f"divisor {d} does not divide {self.level}")

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(self.exps.values()), 2)

    @property
    def order(self) -> Fraction:
        return Fraction(sum(d * r for d, r in self.exps.items()), 24)

    def meta(self) -> FormMeta:
        h = self.order
        if h.denominator != 1:
            raise NonIntegralOrder(f"order {h} is not an integer")
        return FormMeta(weight=self.weight, level=self.level, order=int(h))


def newman_check(e: EtaQuotient) -> bool:
    """Newman's congruences: sum d r_d and sum (N/d) r_d both 0 mod 24."""
    s1 = sum(d * r for d, r in e.exps.items())
    s2 = sum((e.level // d) * r for d, r in e.exps.items())
    return s1 % 24 == 0 and s2 % 24 == 0


def eta_quotient(e: EtaQuotient, prec: int) -> ProductForm:
    """Product form of an eta quotient: c(n) = sum_{delta | (n, N)} r_delta."""
    h = e.order
    if h.denominator != 1:
        raise NonIntegralOrder(f"order {h} is not an integer")
    exps = []
    for n in range(1, prec):
        exps.append(sum(r for d, r in e.exps.items() if n % d == 0))
    return ProductForm(int(h), exps, prec=prec)
