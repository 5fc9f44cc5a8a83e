"""Additive Hecke operators.

Integer weight: T_k(n) on q-expansions,
    f|T_k(n) = sum_m ( sum_{0<d|(m,n)} chi_N(d) d^{k-1} a(mn/d^2) ) q^m,
with the convention gcd(0, n) = n so the constant term picks up every
divisor of n (this is what makes T_2(n) E_2 = sigma(n) E_2 come out).

Half-integral weight 1/2: T(p^2) on Kohnen plus-space coefficient maps,
    (f|T(p^2))(n) = a(p^2 n) + (1/p) (n|p) a(n) + (1/p) a(n/p^2),
with (n|p) the Legendre symbol and a(n/p^2) = 0 unless p^2 | n; higher
powers via T(p^{2r}) = T(p^{2r-2}) T(p^2) - (1/p) T(p^{2r-4}).
Coefficients here are rational: the 1/p factors are restored to integers
by the caller's scaling by n (borcherds module).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .classical import divisors
from .errors import InsufficientPrecision, NotOddPrime
from .heckemult import chi_triv, factorize, is_prime
from .qseries import QSeries

Q = Fraction


@lru_cache(maxsize=None)
def legendre(n: int, p: int) -> int:
    """Legendre symbol (n|p) for odd prime p, via Euler's criterion."""
    n %= p
    if n == 0:
        return 0
    e = pow(n, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def hecke_add(f: QSeries, k: int, level: int, n: int,
              prec: int | None = None) -> QSeries:
    """Integer-weight operator T_k(n) on a q-expansion with valuation >= 0."""
    if n < 1:
        raise ValueError("operator index must be >= 1")
    if not f.is_zero and f.valuation < 0:
        raise ValueError("hecke_add requires a series with valuation >= 0")
    if prec is None:
        prec = (f.prec - 1) // n + 1
    if n * (prec - 1) >= f.prec:
        raise InsufficientPrecision(
            f"T_{k}({n}) at output prec {prec} needs input through "
            f"q^{n * (prec - 1)}, have prec {f.prec}")
    out = []
    for m in range(prec):
        g = n if m == 0 else gcd(m, n)
        b = Q(0)
        for d in divisors(g):
            if chi_triv(level, d) == 0:
                continue
            b += Q(d) ** (k - 1) * f[m * n // (d * d)]
        out.append(b)
    if all(c == 0 for c in out):
        return QSeries.zero(prec)
    return QSeries(0, out, prec=prec)


def hecke_add_relation_check(k: int, level: int, m: int, n: int, f: QSeries,
                             prec: int) -> bool:
    """T_k(m) T_k(n) = sum_{0<d|(m,n)} chi_N(d) d^{k-1} T_k(mn/d^2) on f."""
    lhs = hecke_add(hecke_add(f, k, level, m, prec=n * (prec - 1) + 1),
                    k, level, n, prec=prec)
    rhs = QSeries.zero(prec)
    for d in divisors(gcd(m, n)):
        if chi_triv(level, d) == 0:
            continue
        term = hecke_add(f, k, level, m * n // (d * d), prec=prec)
        rhs = rhs.add(term.scale(Q(d) ** (k - 1)))
    return lhs.agrees(rhs, upto=prec)


class PlusSpaceSeq:
    """Sparse coefficient map of a weight-1/2 plus-space form.

    Stored indices satisfy n = 0, 1 (mod 4); the principal part (negative
    indices) is finite and complete.  Nonnegative indices below prec that
    are absent are taken to be 0.
    """

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: dict, prec: int):
        clean = {}
        for n, a in coeffs.items():
            a = Q(a)
            if a == 0:
                continue
            if n % 4 not in (0, 1):
                raise ValueError(f"index {n} violates the plus condition")
            if n >= prec:
                raise ValueError(f"index {n} is at or above prec {prec}")
            clean[int(n)] = a
        self.coeffs = clean
        self.prec = prec

    def __getitem__(self, n: int) -> Fraction:
        if n >= self.prec:
            raise InsufficientPrecision(
                f"coefficient a({n}) unknown (prec {self.prec})")
        return self.coeffs.get(n, Q(0))

    @property
    def min_index(self) -> int:
        return min(self.coeffs, default=0)

    def scale(self, r) -> "PlusSpaceSeq":
        r = Q(r)
        return PlusSpaceSeq({n: r * a for n, a in self.coeffs.items()},
                            self.prec)

    def add(self, other: "PlusSpaceSeq") -> "PlusSpaceSeq":
        prec = min(self.prec, other.prec)
        keys = set(self.coeffs) | set(other.coeffs)
        return PlusSpaceSeq(
            {n: self[n] + other[n] for n in keys if n < prec}, prec)

    def truncate(self, prec: int) -> "PlusSpaceSeq":
        if prec > self.prec:
            raise InsufficientPrecision(
                f"cannot extend prec {self.prec} to {prec}")
        return PlusSpaceSeq(
            {n: a for n, a in self.coeffs.items() if n < prec}, prec)

    def agrees(self, other: "PlusSpaceSeq", upto: int | None = None) -> bool:
        bound = min(self.prec, other.prec)
        if upto is not None:
            bound = min(bound, upto)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[n] == other[n] for n in keys if n < bound)

    def to_json(self) -> dict:
        return {"prec": self.prec,
                "coeffs": {str(n): str(a)
                           for n, a in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "PlusSpaceSeq":
        return cls({int(n): Fraction(a)
                    for n, a in data["coeffs"].items()}, data["prec"])


def _hecke_half_p2(f: PlusSpaceSeq, p: int) -> PlusSpaceSeq:
    p2 = p * p
    prec = (f.prec - 1) // p2 + 1
    lo = p2 * min(f.min_index, 0)
    out = {}
    for n in range(lo, prec):
        if n % 4 not in (0, 1):
            continue
        a = f[p2 * n] + Q(legendre(n, p), p) * f[n]
        if n % p2 == 0:
            a += Q(1, p) * f[n // p2]
        if a != 0:
            out[n] = a
    return PlusSpaceSeq(out, prec)


def hecke_half(f: PlusSpaceSeq, p: int, r: int = 1) -> PlusSpaceSeq:
    """T_{1/2}(p^{2r}) for an odd prime p, by the three-term recursion."""
    if not is_prime(p) or p == 2:
        raise NotOddPrime(f"{p} is not an odd prime")
    if r < 0:
        raise ValueError("power must be >= 0")
    if r == 0:
        return f
    prev, cur = f, _hecke_half_p2(f, p)
    for _ in range(2, r + 1):
        nxt = _hecke_half_p2(cur, p).add(prev.scale(Q(-1, p)))
        prev, cur = cur, nxt
    return cur


def hecke_half_composite(f: PlusSpaceSeq, n: int) -> PlusSpaceSeq:
    """T_{1/2}(n^2) for odd n, as the product of prime-power factors."""
    if n < 1 or n % 2 == 0:
        raise ValueError("index must be a positive odd integer")
    out = f
    for p, r in factorize(n):
        out = hecke_half(out, p, r)
    return out
