"""Hurwitz class numbers, the exponent-level Borcherds map, and the
Hecke-equivariance harness at level 1.

The lift B sends a plus-space coefficient sequence a(n) to
q^{-h} prod (1-q^n)^{a(n^2)}, where h is the constant term of the pairing
with the Hurwitz series -1/12 + sum H(n) q^n; concretely
h = -a(0)/12 + sum_{d>0} a(-d) H(d) over the finite principal part.
With this sign, B(3 f_3) has order -1 (the j-invariant) and B(f_3 + 4 f_0)
has order 0 and weight 4 (E_4).  The weight of B(f) is a(0).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import InsufficientPrecision, NonIntegralOrder
from .heckeadd import PlusSpaceSeq, hecke_half_composite
from .heckemult import mult_hecke
from .prodform import ProductForm
from .qseries import FormMeta, QSeries

Q = Fraction


def _form_weight(a: int, b: int, c: int) -> Fraction:
    if a == c and b == 0:
        return Q(1, 2)
    if a == b == c:
        return Q(1, 3)
    return Q(1)


@lru_cache(maxsize=None)
def hurwitz(n: int) -> Fraction:
    """Hurwitz class number H(n) (discriminant -n); H(0) = -1/12."""
    if n < 0:
        raise ValueError("hurwitz is defined for n >= 0")
    if n == 0:
        return Q(-1, 12)
    if n % 4 in (1, 2):
        return Q(0)
    total = Q(0)
    a = 1
    while 3 * a * a <= n:
        for b in range(-a, a + 1):
            if (b * b + n) % (4 * a) != 0:
                continue
            c = (b * b + n) // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            total += _form_weight(a, b, c)
        a += 1
    return total


def hurwitz_oracle(n: int) -> Fraction:
    """Independent check: enumerate all forms with 0 < a, c <= n and
    reduce each to canonical form; weight-count the distinct classes."""
    if n == 0:
        return Q(-1, 12)
    if n % 4 in (1, 2):
        return Q(0)
    classes = set()
    for a in range(1, n + 1):
        for c in range(1, n + 1):
            b2 = 4 * a * c - n
            if b2 < 0:
                continue
            b = isqrt(b2)
            if b * b != b2:
                continue
            for bb in ({b, -b} if b else {0}):
                classes.add(_reduce_form(a, bb, c))
    return sum((_form_weight(*f) for f in classes), Q(0))


def _reduce_form(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Gauss reduction of a positive-definite form to |b| <= a <= c with
    b >= 0 when |b| = a or a = c."""
    while True:
        if not -a < b <= a:
            # x -> x - k y moves b into (-a, a]
            k = (b + a - 1) // (2 * a)
            a, b, c = a, b - 2 * k * a, a * k * k - b * k + c
            continue
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if b < 0 and (-b == a or a == c):
        b = -b
    return a, b, c


def hurwitz_table(bound: int) -> dict[int, Fraction]:
    """H(n) for 0 <= n <= bound (zero entries included)."""
    return {n: hurwitz(n) for n in range(bound + 1)}


def hurwitz_series(prec: int) -> QSeries:
    """-1/12 + sum_{n = 0,3 mod 4} H(n) q^n."""
    return QSeries(0, [hurwitz(n) for n in range(prec)], prec=prec)


def pairing_order(f: PlusSpaceSeq) -> Fraction:
    """Constant term of f * (Hurwitz series): -a(0)/12 + sum a(-d) H(d)."""
    h = -f[0] / 12
    for n, a in f.coeffs.items():
        if n < 0:
            h += a * hurwitz(-n)
    return h


def borcherds_lift(f: PlusSpaceSeq, prec: int) -> tuple[ProductForm, FormMeta]:
    """q^{-h} prod (1-q^n)^{a(n^2)} with weight a(0), level 1."""
    if (prec - 1) ** 2 >= f.prec:
        raise InsufficientPrecision(
            f"lift at prec {prec} needs square coefficients up to "
            f"{(prec - 1) ** 2}, have prec {f.prec}")
    h = pairing_order(f)
    if h.denominator != 1:
        raise NonIntegralOrder(f"pairing constant term {h} is not an integer")
    exps = [f[n * n] for n in range(1, prec)]
    pf = ProductForm(-int(h), exps, prec=prec)
    meta = FormMeta(weight=f[0], level=1, order=-int(h))
    return pf, meta


def required_square_indices(n: int, prec: int) -> list[int]:
    """Square indices the n-equivariance check reads from the input data."""
    return [m * m for m in range(1, n * (prec - 1) + 1)]


def equivariance_check(f: PlusSpaceSeq, n: int,
                       prec: int) -> tuple[bool, int | None]:
    """Compare B(f)|T(n) with B(f | n T_{1/2}(n^2)) at level 1.

    Returns (ok, witness); witness 0 marks an order/weight mismatch,
    otherwise the first differing exponent index.
    """
    if n % 2 == 0:
        raise ValueError("equivariance is stated for odd n")
    for idx in required_square_indices(n, prec):
        if idx >= f.prec:
            raise InsufficientPrecision(
                f"need square coefficient a({idx}), have prec {f.prec}")
    lift_prec = n * (prec - 1) + 1
    pf, meta = borcherds_lift(f, lift_prec)
    path1 = mult_hecke(pf, meta, n, prec=prec)

    g = hecke_half_composite(f, n).scale(n)
    path2_form, path2_meta = borcherds_lift(g, prec)

    if path1.meta != path2_meta:
        return False, 0
    w = path1.form.first_disagreement(path2_form, upto=prec)
    return (w is None), w


def plus_space_from_product(pf: ProductForm, principal: dict,
                            weight) -> PlusSpaceSeq:
    """Plus-space data whose lift is the given product form: square
    coefficients a(m^2) = c(m), constant term a(0) = weight, together
    with the supplied principal part."""
    coeffs = dict(principal)
    coeffs[0] = Q(weight)
    for m in range(1, pf.prec):
        coeffs[m * m] = pf.c(m)
    return PlusSpaceSeq(coeffs, (pf.prec - 1) ** 2 + 1)
