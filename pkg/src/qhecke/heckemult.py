"""Multiplicative Hecke operators acting on product-form exponents.

The operator for a prime power transforms the exponent sequence c(n)
directly; the leading coefficient stays 1 by construction, so the scalar
normalization that fixes it in the slash-product definition never needs to
be computed.  Weight and order are tracked alongside: for p not dividing
the level both are multiplied by sigma(p^r); for p dividing the level the
weight is multiplied by p^r and the order is unchanged.

Composite operators apply the prime-power factors in ascending prime
order; commutativity makes this canonical and is verified by the test
suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classical import divisors, sigma
from .errors import (InsufficientPrecision, NonIntegralExponents, NotPrime)
from .prodform import ProductForm, prod_mul, prod_pow
from .qseries import FormMeta

Q = Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime-power factorization [(p, r), ...] with primes ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            r = 0
            while n % p == 0:
                n //= p
                r += 1
            out.append((p, r))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def chi_triv(m: int, x: int) -> int:
    """Trivial Dirichlet character mod m: 1 if gcd(x, m) = 1, else 0."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return 1 if gcd(x, m) == 1 else 0


def c_hat(c, X: int, Y: int, Z: int) -> Fraction:
    """c(X*Y/Z) when Z | Y, else 0; c is an exponent accessor c(n)."""
    if Y % Z != 0:
        return Q(0)
    return c(X * (Y // Z))


@dataclass(frozen=True)
class MultHeckeResult:
    form: ProductForm
    meta: FormMeta


def _max_out_prec(in_prec: int, n: int) -> int:
    return (in_prec - 1) // n + 1


def mult_hecke_prime_power(f: ProductForm, meta: FormMeta, p: int, r: int,
                           prec: int | None = None) -> MultHeckeResult:
    """Apply the prime-power operator to exponents, weight and order."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError("exponent r must be >= 1")
    pr = p ** r
    if prec is None:
        prec = _max_out_prec(f.prec, pr)
    if prec < 2 or pr * (prec - 1) >= f.prec:
        raise InsufficientPrecision(
            f"T({p}^{r}) at output prec {prec} needs input exponents "
            f"up to {pr * (prec - 1)}, have {f.prec - 1}")
    c = f.c
    out = []
    if meta.level % p != 0:
        for n in range(1, prec):
            total = Q(0)
            for i in range(r + 1):
                total += p ** i * c_hat(c, p ** i, n, p ** (r - i))
            for k in range(r):
                Z = p ** (r - k - 1)
                if n % Z == 0 and (n // Z) % p != 0:
                    for i in range(k + 1):
                        total += p ** i * c_hat(c, p ** i, n, Z)
            out.append(total)
        new_meta = FormMeta(weight=meta.weight * sigma(pr),
                            level=meta.level,
                            order=meta.order * sigma(pr))
    else:
        for n in range(1, prec):
            total = pr * c(pr * n)
            if n % p != 0:
                for i in range(r):
                    total += p ** i * c(p ** i * n)
            out.append(total)
        new_meta = FormMeta(weight=meta.weight * pr,
                            level=meta.level,
                            order=meta.order)
    return MultHeckeResult(ProductForm(new_meta.order, out, prec=prec),
                           new_meta)


def mult_hecke(f: ProductForm, meta: FormMeta, n: int,
               prec: int | None = None) -> MultHeckeResult:
    """Composite operator: prime-power factors applied in ascending order."""
    if n < 1:
        raise ValueError("operator index must be >= 1")
    if prec is None:
        prec = _max_out_prec(f.prec, n)
    if n == 1:
        return MultHeckeResult(f.truncate(prec), meta)
    if n * (prec - 1) >= f.prec:
        raise InsufficientPrecision(
            f"T({n}) at output prec {prec} needs input exponents "
            f"up to {n * (prec - 1)}, have {f.prec - 1}")
    result = MultHeckeResult(f, meta)
    rest = n
    for p, r in factorize(n):
        rest //= p ** r
        # keep just enough precision for the remaining factors
        step_prec = prec if rest == 1 else rest * (prec - 1) + 1
        result = mult_hecke_prime_power(result.form, result.meta, p, r,
                                        prec=step_prec)
    return result


def verify_algebra_relation(f: ProductForm, meta: FormMeta, m: int, n: int,
                            prec: int) -> tuple[bool, int | None]:
    """Check f|T(m)T(n) = f|T(n)T(m) = prod over d | (m,n) with gcd(d,N)=1
    of (f|T(mn/d^2))^d, comparing exponents, weight and order.

    Returns (ok, witness); the witness is the first differing exponent
    index (0 marks an order or weight mismatch).
    """
    lhs = mult_hecke(f, meta, m, prec=n * (prec - 1) + 1)
    lhs = mult_hecke(lhs.form, lhs.meta, n, prec=prec)
    swapped = mult_hecke(f, meta, n, prec=m * (prec - 1) + 1)
    swapped = mult_hecke(swapped.form, swapped.meta, m, prec=prec)

    rhs_form = None
    rhs_weight = Q(0)
    for d in divisors(gcd(m, n)):
        if chi_triv(meta.level, d) == 0:
            continue
        part = mult_hecke(f, meta, m * n // d ** 2, prec=prec)
        factor = prod_pow(part.form, d)
        rhs_weight += d * part.meta.weight
        rhs_form = factor if rhs_form is None else prod_mul(rhs_form, factor)

    for other, other_weight in ((swapped.form, swapped.meta.weight),
                                (rhs_form, rhs_weight)):
        if lhs.meta.weight != other_weight:
            return False, 0
        w = lhs.form.first_disagreement(other, upto=prec)
        if w is not None:
            return False, w
    return True, None


def congruence_check(f: ProductForm, meta: FormMeta, p: int, r: int,
                     prec: int) -> bool:
    """c_{p^r}(n) mod p: c(e) when n = p^m e with m < r, else c(n/p^r)."""
    if not f.is_integral():
        raise NonIntegralExponents("congruence needs integral exponents")
    if meta.level % p == 0:
        raise ValueError("congruence requires p not dividing the level")
    res = mult_hecke_prime_power(f, meta, p, r, prec=prec)
    for n in range(1, prec):
        m, e = 0, n
        while e % p == 0:
            e //= p
            m += 1
        expected = f.c(e) if m < r else f.c(n // p ** r)
        if (res.form.c(n) - expected) % p != 0:
            return False
    return True
