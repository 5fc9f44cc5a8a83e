"""Infinite-product form q^h * prod_{n>=1} (1 - q^n)^{c(n)} of a series.

Conversions between Fourier expansions and product exponents are exact.
A ProductForm of precision P stores c(1), ..., c(P-1) and determines the
Fourier expansion through q^{h+P-1}.

fourier_to_product is implemented twice: by the exponent recursion on the
normalized Fourier coefficients, and through log/exp series.  The log/exp
path is the production default; the recursion is kept as an independent
cross-check (and is faster on integral input).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InsufficientPrecision, NotNormalized, ZeroSeries
from .qseries import QSeries, exp_series, log_series

Q = Fraction


class ProductForm:
    __slots__ = ("order", "exponents", "prec")

    def __init__(self, order: int, exponents, prec: int | None = None):
        exponents = tuple(Q(c) for c in exponents)
        if prec is None:
            prec = len(exponents) + 1
        if prec < 2:
            raise ValueError("ProductForm precision must be >= 2")
        if len(exponents) != prec - 1:
            raise ValueError("need exponents c(1..prec-1)")
        self.order = order
        self.exponents = exponents
        self.prec = prec

    @classmethod
    def constant_exponents(cls, order: int, value, prec: int) -> "ProductForm":
        return cls(order, [value] * (prec - 1), prec=prec)

    def c(self, n: int) -> Fraction:
        """Exponent c(n); zero for n < 1, error beyond known precision."""
        if n < 1:
            return Q(0)
        if n >= self.prec:
            raise InsufficientPrecision(
                f"exponent c({n}) unknown (prec {self.prec})")
        return self.exponents[n - 1]

    def truncate(self, prec: int) -> "ProductForm":
        if prec > self.prec:
            raise InsufficientPrecision(
                f"cannot extend prec {self.prec} to {prec}")
        if prec == self.prec:
            return self
        return ProductForm(self.order, self.exponents[: prec - 1], prec=prec)

    def agrees(self, other: "ProductForm", upto: int | None = None) -> bool:
        bound = min(self.prec, other.prec)
        if upto is not None:
            bound = min(bound, upto)
        return self.order == other.order and all(
            self.c(n) == other.c(n) for n in range(1, bound))

    def first_disagreement(self, other: "ProductForm",
                           upto: int | None = None) -> int | None:
        """Smallest n with c(n) mismatch, or 0 for an order mismatch."""
        if self.order != other.order:
            return 0
        bound = min(self.prec, other.prec)
        if upto is not None:
            bound = min(bound, upto)
        for n in range(1, bound):
            if self.c(n) != other.c(n):
                return n
        return None

    def __eq__(self, other):
        if not isinstance(other, ProductForm):
            return NotImplemented
        return (self.order == other.order and self.prec == other.prec
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.order, self.prec, self.exponents))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.exponents[:5])
        tail = ", ..." if len(self.exponents) > 5 else ""
        return (f"ProductForm(order={self.order}, "
                f"c=[{head}{tail}], prec={self.prec})")

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.exponents)

    def mul(self, other: "ProductForm") -> "ProductForm":
        prec = min(self.prec, other.prec)
        exps = [self.c(n) + other.c(n) for n in range(1, prec)]
        return ProductForm(self.order + other.order, exps, prec=prec)

    def pow(self, e: int) -> "ProductForm":
        return ProductForm(self.order * e,
                           [e * c for c in self.exponents], prec=self.prec)

    __mul__ = mul
    __pow__ = pow

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "prec": self.prec,
            "exponents": [str(c) for c in self.exponents],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ProductForm":
        return cls(data["order"], [Fraction(s) for s in data["exponents"]],
                   prec=data["prec"])


def prod_mul(a: ProductForm, b: ProductForm) -> ProductForm:
    return a.mul(b)


def prod_pow(a: ProductForm, e: int) -> ProductForm:
    return a.pow(e)


def product_to_fourier(p: ProductForm, prec: int) -> QSeries:
    """Expand q^h * prod (1-q^n)^{c(n)} as a QSeries up to the given prec."""
    h = p.order
    nterms = prec - h
    if nterms > p.prec:
        raise InsufficientPrecision(
            f"need exponents up to {nterms - 1}, have {p.prec - 1}")
    if nterms < 1:
        raise ValueError("requested precision is below the leading term")
    # log of the product: coefficient of q^m is -sum_{d|m} c(d) d / m
    logc = [Q(0)] * nterms
    for d in range(1, nterms):
        cd = p.c(d)
        if cd == 0:
            continue
        w = -cd * d
        for m in range(d, nterms, d):
            logc[m] += w / m
    u = exp_series(QSeries(0, logc, prec=nterms) if any(logc)
                   else QSeries.zero(nterms))
    return QSeries(h, u.coeffs, prec=prec)


def _normalized_unit(f: QSeries) -> tuple[int, list[Fraction]]:
    if f.is_zero:
        raise ZeroSeries("the zero series has no product form")
    if f[f.valuation] != 1:
        raise NotNormalized(
            f"leading coefficient is {f[f.valuation]}, expected 1")
    return f.valuation, list(f.coeffs)


def fourier_to_product(f: QSeries) -> ProductForm:
    """Borcherds exponents of f via log series (production path)."""
    h, unit = _normalized_unit(f)
    t = len(unit)
    lg = log_series(QSeries(0, unit, prec=t))
    # -n L(n) = sum_{d|n} d c(d); peel divisors from below
    c = [Q(0)] * t  # c[n] for 1 <= n < t
    for n in range(1, t):
        s = -lg[n] * n
        for d in range(1, n):
            if n % d == 0 and c[d] != 0:
                s -= d * c[d]
        c[n] = s / n
    return ProductForm(h, c[1:], prec=t)


def fourier_to_product_recursive(f: QSeries) -> ProductForm:
    """Borcherds exponents via the coefficient recursion (cross-check path).

    With f = q^h (1 + sum a(n) q^n):
    c(n) = -a(n) - (1/n) ( sum_{u|n, u<n} u c(u)
                           + sum_{s<n} a(n-s) sum_{u|s} u c(u) ).
    """
    h, unit = _normalized_unit(f)
    t = len(unit)
    a = unit  # a[0] == 1
    c = [Q(0)] * t
    S = [Q(0)] * t  # S[s] = sum_{u|s} u c(u)
    for n in range(1, t):
        partial = Q(0)  # sum over proper divisors of n
        for u in range(1, n):
            if n % u == 0 and c[u] != 0:
                partial += u * c[u]
        conv = Q(0)
        for s in range(1, n):
            if a[n - s] != 0 and S[s] != 0:
                conv += a[n - s] * S[s]
        c[n] = -a[n] - (partial + conv) / n
        S[n] = partial + n * c[n]
    return ProductForm(h, c[1:], prec=t)
