"""Exact truncated Laurent series in q over the rationals.

A QSeries represents q^v * (a(v) + a(v+1) q + ...) with coefficients known
for all exponents n with v <= n < prec.  Coefficients are exact
``fractions.Fraction`` values; nothing is ever rounded.  Values are
immutable after construction, so concurrent read-only use is safe.

The identically-zero series carries an explicit flag together with a
precision bound; its valuation is undefined and querying it raises
``ZeroSeries``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLeadingTerm, InsufficientPrecision, ZeroSeries

Q = Fraction


@dataclass(frozen=True)
class FormMeta:
    """Classification data of a form: weight, level, order at infinity."""

    weight: Fraction
    level: int
    order: int

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.level < 1:
            raise ValueError("level must be >= 1")


def _as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class QSeries:
    __slots__ = ("_val", "prec", "coeffs", "is_zero")

    def __init__(self, valuation, coeffs, prec=None, *, is_zero=False):
        coeffs = [_as_q(c) for c in coeffs]
        if prec is None:
            prec = valuation + len(coeffs)
        # trim leading zeros so coeffs[0] is the q^valuation coefficient
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            valuation += 1
        if not coeffs or is_zero:
            self._val = None
            self.prec = prec
            self.coeffs = ()
            self.is_zero = True
            return
        if len(coeffs) != prec - valuation:
            raise ValueError("coeffs length does not match prec - valuation")
        self._val = valuation
        self.prec = prec
        self.coeffs = tuple(coeffs)
        self.is_zero = False

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, prec):
        return cls(0, [], prec=prec, is_zero=True)

    @classmethod
    def one(cls, prec):
        return cls.monomial(0, prec=prec)

    @classmethod
    def monomial(cls, n, coeff=1, prec=None):
        if prec is None:
            prec = n + 1
        c = [Q(0)] * (prec - n)
        c[0] = _as_q(coeff)
        return cls(n, c, prec=prec)

    # -- basic access --------------------------------------------------------

    @property
    def valuation(self) -> int:
        if self.is_zero:
            raise ZeroSeries("valuation of the zero series is undefined")
        return self._val

    def __getitem__(self, n: int) -> Fraction:
        if n >= self.prec:
            raise InsufficientPrecision(
                f"coefficient of q^{n} unknown (prec {self.prec})")
        if self.is_zero or n < self._val:
            return Q(0)
        return self.coeffs[n - self._val]

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise InsufficientPrecision(
                f"cannot extend prec {self.prec} to {prec}")
        if prec == self.prec:
            return self
        if self.is_zero or prec <= self._val:
            return QSeries.zero(prec)
        return QSeries(self._val, self.coeffs[: prec - self._val], prec=prec)

    def agrees(self, other: "QSeries", upto: int | None = None) -> bool:
        """Coefficient-wise equality for all exponents below the common prec."""
        bound = min(self.prec, other.prec)
        if upto is not None:
            bound = min(bound, upto)
        lo = []
        for s in (self, other):
            lo.append(s.prec if s.is_zero else s._val)
        start = min(lo)
        return all(self[n] == other[n] for n in range(start, bound))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.is_zero == other.is_zero and self._val == other._val
                and self.prec == other.prec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self._val, self.prec, self.coeffs, self.is_zero))

    def __repr__(self):
        if self.is_zero:
            return f"QSeries.zero(prec={self.prec})"
        terms = ", ".join(
            f"q^{self._val + i}: {c}" for i, c in enumerate(self.coeffs[:6]))
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"QSeries({terms}{tail}; prec={self.prec})"

    # -- ring operations -----------------------------------------------------

    def add(self, other: "QSeries") -> "QSeries":
        prec = min(self.prec, other.prec)
        if self.is_zero and other.is_zero:
            return QSeries.zero(prec)
        if self.is_zero:
            return other.truncate(prec)
        if other.is_zero:
            return self.truncate(prec)
        val = min(self._val, other._val)
        coeffs = [self[n] + other[n] for n in range(val, prec)]
        if all(c == 0 for c in coeffs):
            return QSeries.zero(prec)
        return QSeries(val, coeffs, prec=prec)

    def neg(self) -> "QSeries":
        if self.is_zero:
            return self
        return QSeries(self._val, [-c for c in self.coeffs], prec=self.prec)

    def scale(self, r) -> "QSeries":
        r = _as_q(r)
        if self.is_zero or r == 0:
            return QSeries.zero(self.prec)
        return QSeries(self._val, [r * c for c in self.coeffs], prec=self.prec)

    def mul(self, other: "QSeries") -> "QSeries":
        if self.is_zero or other.is_zero:
            # exact zero times anything is exact zero; keep a sane bound
            if self.is_zero and other.is_zero:
                return QSeries.zero(min(self.prec, other.prec))
            z, f = (self, other) if self.is_zero else (other, self)
            return QSeries.zero(z.prec + f._val)
        va, vb = self._val, other._val
        prec = min(va + other.prec, vb + self.prec)
        ta, tb = self.coeffs, other.coeffs
        nterms = prec - va - vb
        out = [Q(0)] * nterms
        for i, ai in enumerate(ta):
            if i >= nterms:
                break
            if ai == 0:
                continue
            jmax = min(len(tb), nterms - i)
            for j in range(jmax):
                bj = tb[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return QSeries(va + vb, out, prec=prec)

    def inv(self) -> "QSeries":
        """Multiplicative inverse; valuation -v, same number of known terms."""
        if self.is_zero:
            raise ZeroSeries("cannot invert the zero series")
        v = self._val
        t = self.prec - v
        a = self.coeffs
        b = [Q(0)] * t
        b[0] = 1 / a[0]
        for n in range(1, t):
            s = Q(0)
            for k in range(1, min(n, len(a) - 1) + 1):
                if a[k] != 0 and b[n - k] != 0:
                    s += a[k] * b[n - k]
            b[n] = -s / a[0]
        return QSeries(-v, b, prec=-v + t)

    def pow_int(self, e: int) -> "QSeries":
        if e == 0:
            if self.is_zero:
                raise ZeroSeries("0^0 is undefined for series")
            return QSeries.one(self.prec - self._val)
        base = self.inv() if e < 0 else self
        e = abs(e)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return result

    def rescale_q(self, m: int) -> "QSeries":
        """Substitute q -> q^m, moving a(n) to exponent m*n."""
        if m < 1:
            raise ValueError("rescale factor must be >= 1")
        if self.is_zero:
            return QSeries.zero(m * self.prec)
        out = [Q(0)] * (m * self.prec - m * self._val)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return QSeries(m * self._val, out, prec=m * self.prec)

    def theta_op(self) -> "QSeries":
        """Apply q d/dq: the coefficient at exponent n becomes n*a(n)."""
        if self.is_zero:
            return self
        coeffs = [(self._val + i) * c for i, c in enumerate(self.coeffs)]
        if all(c == 0 for c in coeffs):
            return QSeries.zero(self.prec)
        return QSeries(self._val, coeffs, prec=self.prec)

    __add__ = add
    __mul__ = mul
    __neg__ = neg

    def __sub__(self, other):
        return self.add(other.neg())

    def __pow__(self, e):
        return self.pow_int(e)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        if self.is_zero:
            return {"valuation": self.prec, "prec": self.prec, "coeffs": []}
        return {
            "valuation": self._val,
            "prec": self.prec,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        coeffs = [Fraction(s) for s in data["coeffs"]]
        if not coeffs:
            return cls.zero(data["prec"])
        return cls(data["valuation"], coeffs, prec=data["prec"])


def log_series(a: QSeries) -> QSeries:
    """Logarithm of a series with constant term 1, exact to a's precision."""
    if a.is_zero or a.valuation != 0 or a[0] != 1:
        raise BadLeadingTerm("log_series needs a = 1 + O(q)")
    t = a.theta_op().mul(a.inv())
    out = [Q(0)] * a.prec
    if not t.is_zero:
        for n in range(1, a.prec):
            out[n] = t[n] / n
    if all(c == 0 for c in out):
        return QSeries.zero(a.prec)
    return QSeries(0, out, prec=a.prec)


def exp_series(a: QSeries) -> QSeries:
    """Exponential of a series with no constant term, exact to a's precision."""
    if not a.is_zero and a.valuation < 1:
        raise BadLeadingTerm("exp_series needs a = O(q)")
    prec = a.prec
    e = [Q(0)] * prec
    e[0] = Q(1)
    # n e(n) = sum_{k=1..n} k a(k) e(n-k)
    ka = [Q(0)] * prec
    if not a.is_zero:
        for k in range(a.valuation, prec):
            ka[k] = k * a[k]
    for n in range(1, prec):
        s = Q(0)
        for k in range(1, n + 1):
            if ka[k] != 0 and e[n - k] != 0:
                s += ka[k] * e[n - k]
        e[n] = s / n
    return QSeries(0, e, prec=prec)


# module-level aliases matching the operation-style API
def add(a, b):
    return a.add(b)


def mul(a, b):
    return a.mul(b)


def inv(a):
    return a.inv()


def pow_int(a, e):
    return a.pow_int(e)


def rescale_q(a, m):
    return a.rescale_q(m)


def theta_op(a):
    return a.theta_op()
