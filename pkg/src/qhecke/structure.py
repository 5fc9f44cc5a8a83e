"""Structural maps on product forms: the weight-2 logarithmic-derivative
map, multiplicative eigenform detection, and eta-quotient recognition.

The log-derivative map sends f of weight k to Theta(f)/f - k E_2 / 12,
computed from the product exponents via the closed form
Theta(f)/f = h - sum_n ( sum_{d|n} d c(d) ) q^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .classical import EtaQuotient, divisors, eisenstein
from .errors import InsufficientPrecision, NonIntegralExponents
from .heckeadd import hecke_add
from .heckemult import mult_hecke
from .prodform import ProductForm
from .qseries import FormMeta, QSeries

Q = Fraction


def theta_quotient(f: ProductForm, prec: int) -> QSeries:
    """Theta(f)/f = h - sum_n (sum_{d|n} d c(d)) q^n from the exponents."""
    if prec > f.prec:
        raise InsufficientPrecision(
            f"need exponents up to {prec - 1}, have {f.prec - 1}")
    coeffs = [Q(f.order)] + [Q(0)] * (prec - 1)
    for d in range(1, prec):
        cd = f.c(d)
        if cd == 0:
            continue
        w = d * cd
        for n in range(d, prec, d):
            coeffs[n] -= w
    if all(c == 0 for c in coeffs):
        return QSeries.zero(prec)
    return QSeries(0, coeffs, prec=prec)


def log_derivative(f: ProductForm, meta: FormMeta, prec: int) -> QSeries:
    return theta_quotient(f, prec).add(
        eisenstein(2, prec).scale(-meta.weight / 12))


def logderiv_equivariance(f: ProductForm, meta: FormMeta, n: int,
                          prec: int) -> tuple[bool, int | None]:
    """Check that the log-derivative of f|T(n) equals T_2(n) applied to
    the log-derivative of f.  Requires (n, level) = 1."""
    if gcd(n, meta.level) != 1:
        raise ValueError("equivariance requires n coprime to the level")
    res = mult_hecke(f, meta, n, prec=prec)
    lhs = log_derivative(res.form, res.meta, prec)
    d = log_derivative(f, meta, n * (prec - 1) + 1)
    rhs = hecke_add(d, 2, meta.level, n, prec=prec)
    if lhs.agrees(rhs, upto=prec):
        return True, None
    for m in range(prec):
        if lhs[m] != rhs[m]:
            return False, m
    return True, None


@dataclass(frozen=True)
class EigenReport:
    is_eigenform: bool
    tested_primes: tuple
    lam: dict = field(default_factory=dict)
    first_violation: tuple | None = None


def is_mult_eigenform(f: ProductForm, level: int, primes,
                      prec: int | None = None) -> EigenReport:
    """Eigenform criterion: c(n) = c(pn) for every tested prime p not
    dividing the level and every n with pn below precision.  The
    eigenvalue for each prime is sigma(p) = p + 1."""
    if prec is None:
        prec = f.prec
    prec = min(prec, f.prec)
    primes = tuple(primes)
    for p in primes:
        if level % p == 0:
            raise ValueError(f"prime {p} divides the level {level}")
        for n in range(1, (prec - 1) // p + 1):
            if f.c(n) != f.c(p * n):
                return EigenReport(False, primes, {},
                                   first_violation=(p, n))
    return EigenReport(True, primes, {p: p + 1 for p in primes})


def _moebius(n: int) -> int:
    m = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            m = -m
        p += 1
    if n > 1:
        m = -m
    return m


def eta_recognize(f: ProductForm, level: int,
                  prec: int | None = None
                  ) -> tuple[EtaQuotient | None, int | None]:
    """Invert c(d) = sum_{delta | (d, N)} r_delta on the divisor lattice
    of N and validate against every available exponent.

    Returns (quotient, None) on success or (None, first failing index).
    Success also requires the order bookkeeping (1/24) sum delta r_delta
    to reproduce f's leading order.
    """
    if not f.is_integral():
        raise NonIntegralExponents("recognition needs integral exponents")
    if prec is None:
        prec = f.prec
    prec = min(prec, f.prec)
    if prec <= level:
        raise InsufficientPrecision(
            f"need exponents through c({level}), have prec {prec}")
    r = {}
    for d in divisors(level):
        r[d] = int(sum(_moebius(d // e) * f.c(e) for e in divisors(d)))
    for n in range(1, prec):
        g = gcd(n, level)
        if f.c(n) != sum(r[d] for d in divisors(g)):
            return None, n
    quotient = EtaQuotient(level, r)
    if quotient.order != f.order:
        return None, 0
    return quotient, None
