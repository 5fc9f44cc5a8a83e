"""Self-contained verification suites exposed through the CLI.

Each suite returns (ok, lines) where lines are human-readable progress /
witness messages.  Suites are deterministic and need no external data.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .borcherds import equivariance_check, hurwitz, hurwitz_oracle, \
    plus_space_from_product
from .classical import EtaQuotient, delta_product, divisors, eisenstein, \
    eta_quotient, j_invariant, sigma
from .heckemult import congruence_check, mult_hecke, verify_algebra_relation
from .prodform import ProductForm, fourier_to_product, \
    fourier_to_product_recursive, prod_mul, product_to_fourier
from .qseries import FormMeta, QSeries
from .structure import logderiv_equivariance

Q = Fraction

J3RHO = 2 ** 15 * 3 * 5 ** 3  # -j(3 rho), the Phi_3(0, X) root


def _e4_product(prec: int) -> tuple[ProductForm, FormMeta]:
    return (fourier_to_product_recursive(eisenstein(4, prec)),
            FormMeta(4, 1, 0))


def _j_product(prec: int) -> tuple[ProductForm, FormMeta]:
    return (fourier_to_product_recursive(j_invariant(prec)),
            FormMeta(0, 1, -1))


def suite_sigma(max_n: int = 200) -> tuple[bool, list[str]]:
    # sieve sigma up to max_n^2 and precompute divisor lists of the gcds
    top = max_n * max_n
    sig = [0] * (top + 1)
    for d in range(1, top + 1):
        for k in range(d, top + 1, d):
            sig[k] += d
    divs = [divisors(g) if g else [] for g in range(max_n + 1)]
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            mn = m * n
            rhs = sum(d * sig[mn // (d * d)] for d in divs[gcd(m, n)])
            if sig[m] * sig[n] != rhs:
                return False, [f"sigma identity fails at (m, n) = ({m}, {n})"]
    return True, [f"sigma(m)sigma(n) identity holds for all m, n <= {max_n}"]


def suite_e4_t3(prec: int = 40) -> tuple[bool, list[str]]:
    pf, meta = _e4_product(3 * (prec - 1) + 2)
    res = mult_hecke(pf, meta, 3, prec=prec)
    pad = prec + 6
    rhs_series = eisenstein(4, pad) \
        .mul(product_to_fourier(delta_product(pad + 2), pad)) \
        .mul(j_invariant(pad).add(QSeries.monomial(0, J3RHO, prec=pad)))
    rhs = fourier_to_product(rhs_series.truncate(prec + 1))
    ok = (res.meta.weight == 16 and res.meta.order == 0
          and res.form.agrees(rhs, upto=prec))
    msg = f"E4|T(3) = E4 * Delta * (j + {J3RHO}) checked to prec {prec}"
    return ok, [msg if ok else "E4|T(3) mismatch: " + repr(
        res.form.first_disagreement(rhs, upto=prec))]


def suite_j_t3(prec: int = 40) -> tuple[bool, list[str]]:
    pf, meta = _j_product(3 * (prec - 1) + 3)
    res = mult_hecke(pf, meta, 3, prec=prec)
    pad = prec + 8
    j = j_invariant(pad)
    shifted = j.add(QSeries.monomial(0, J3RHO, prec=pad))
    rhs = fourier_to_product(j.mul(shifted.pow_int(3)).truncate(prec - 4))
    ok = res.meta.order == -4 and res.form.agrees(rhs, upto=prec)
    msg = f"j|T(3) = j * (j + {J3RHO})^3 checked to prec {prec}"
    return ok, [msg if ok else "j|T(3) mismatch"]


def _algebra_cases(prec: int, max_mn: int):
    in_prec = max_mn * max_mn * (prec - 1) + 2
    yield ("Delta", delta_product(in_prec), FormMeta(12, 1, 1),
           [(m, n) for m in range(1, max_mn + 1)
            for n in range(1, max_mn + 1)])
    pf, meta = _e4_product(in_prec)
    yield ("E4", pf, meta,
           [(m, n) for m in range(1, max_mn + 1)
            for n in range(1, max_mn + 1)])
    eq4 = EtaQuotient(4, {2: -4, 4: 8})
    idx = [2, 3, 4, 6, 9]
    yield ("eta(4t)^8/eta(2t)^4", eta_quotient(eq4, 81 * (prec - 1) + 2),
           eq4.meta(), [(m, n) for m in idx for n in idx])


def suite_algebra(prec: int = 20, max_mn: int = 8) -> tuple[bool, list[str]]:
    lines = []
    ok = True
    for name, pf, meta, pairs in _algebra_cases(prec, max_mn):
        for m, n in pairs:
            good, witness = verify_algebra_relation(pf, meta, m, n, prec)
            if not good:
                ok = False
                lines.append(
                    f"relation fails: f = {name}, (m, n) = ({m}, {n}), "
                    f"first differing index {witness}")
        lines.append(f"T(m)T(n) relation on {name}: "
                     f"{len(pairs)} pairs at prec {prec}")
    return ok, lines


def suite_congruence(prec: int = 40) -> tuple[bool, list[str]]:
    e4, me4 = _e4_product(9 * (prec - 1) + 2)
    pj, mj = _j_product(4 * (prec - 1) + 2)
    cases = [
        ("E4", e4, me4, 3, 1),
        ("E4", e4, me4, 3, 2),
        ("Delta", delta_product(5 * (prec - 1) + 2), FormMeta(12, 1, 1), 5, 1),
        ("j", pj, mj, 2, 2),
    ]
    lines = []
    ok = True
    for name, pf, meta, p, r in cases:
        good = congruence_check(pf, meta, p, r, prec)
        ok = ok and good
        lines.append(f"c_(p^r) congruence mod {p}: f = {name}, "
                     f"p = {p}, r = {r}, n < {prec}: "
                     f"{'ok' if good else 'FAIL'}")
    return ok, lines


def suite_logderiv(prec: int = 40) -> tuple[bool, list[str]]:
    from .structure import log_derivative
    from .heckeadd import hecke_add
    ns = [2, 3, 4, 6, 9]
    in_prec = 9 * (prec - 1) + 2
    cases = [
        ("Delta", delta_product(in_prec), FormMeta(12, 1, 1), ns),
        ("E4", *_e4_product(in_prec), ns),
        ("eta(4t)^8/eta(2t)^4",
         eta_quotient(EtaQuotient(4, {2: -4, 4: 8}), in_prec),
         EtaQuotient(4, {2: -4, 4: 8}).meta(), [3, 9]),
        ("eta(5t)^5/eta(t)",
         eta_quotient(EtaQuotient(5, {1: -1, 5: 5}), in_prec),
         EtaQuotient(5, {1: -1, 5: 5}).meta(), [2, 3, 4, 6, 9]),
    ]
    lines = []
    ok = True
    for name, pf, meta, idxs in cases:
        for n in idxs:
            good, witness = logderiv_equivariance(pf, meta, n, prec)
            if not good:
                ok = False
                lines.append(f"logderiv equivariance fails: f = {name}, "
                             f"n = {n}, q^{witness}")
        lines.append(f"logderiv equivariance on {name}: n in {idxs}, "
                     f"prec {prec}")
    # D(Delta) = 0 and T_2(n) E_2 = sigma(n) E_2
    dd = log_derivative(delta_product(prec + 1), FormMeta(12, 1, 1), prec)
    if not dd.is_zero:
        ok = False
        lines.append("D(Delta) is not zero")
    e2 = eisenstein(2, 10 * prec)
    for n in range(1, 11):
        lhs = hecke_add(e2, 2, 1, n, prec=prec)
        if not lhs.agrees(e2.truncate(prec).scale(sigma(n)), upto=prec):
            ok = False
            lines.append(f"T_2({n}) E_2 != sigma({n}) E_2")
    lines.append(f"D(Delta) = 0 and T_2(n)E_2 = sigma(n)E_2 for n <= 10")
    return ok, lines


def suite_borcherds_equivariance(n: int = 3, case: str = "e4",
                                 prec: int = 30) -> tuple[bool, list[str]]:
    sq_prec = n * (prec - 1) + 1
    if case == "e4":
        pf, _ = _e4_product(n * sq_prec + 1)
        data = plus_space_from_product(pf, {-3: 1}, 4)
    elif case == "j":
        pf, _ = _j_product(n * sq_prec + 2)
        data = plus_space_from_product(pf, {-3: 3}, 0)
    else:
        raise ValueError(f"unknown case {case!r}")
    ok, witness = equivariance_check(data, n, prec)
    msg = (f"Borcherds equivariance, case {case}, n = {n}, prec {prec}: "
           f"{'ok' if ok else f'FAIL at index {witness}'}")
    return ok, [msg]


def suite_hurwitz(bound: int = 500) -> tuple[bool, list[str]]:
    bad = [n for n in range(bound + 1) if hurwitz(n) != hurwitz_oracle(n)]
    spot = (hurwitz(0) == Q(-1, 12) and hurwitz(3) == Q(1, 3)
            and hurwitz(4) == Q(1, 2))
    ok = not bad and spot
    return ok, [f"Hurwitz class numbers agree with the reduction oracle "
                f"for n <= {bound}" if ok else f"Hurwitz mismatch at {bad[:5]}"]


def random_product_form(rng: random.Random, prec: int) -> ProductForm:
    order = rng.randint(-3, 3)
    exps = [rng.randint(-30, 30) for _ in range(prec - 1)]
    return ProductForm(order, exps, prec=prec)


def suite_roundtrip(count: int = 50, prec: int = 24,
                    seed: int = 20240824) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    lines = []
    for i in range(count):
        pf = random_product_form(rng, prec)
        f = product_to_fourier(pf, pf.order + prec)
        back = fourier_to_product(f)
        if not back.agrees(pf):
            return False, [f"roundtrip failed for sample {i}"]
        rec = fourier_to_product_recursive(f)
        if not rec.agrees(pf):
            return False, [f"recursion path disagrees for sample {i}"]
        other = random_product_form(rng, prec)
        g = product_to_fourier(other, other.order + prec)
        hom = fourier_to_product(f.mul(g))
        if not hom.agrees(prod_mul(pf, other)):
            return False, [f"homomorphism failed for sample {i}"]
    lines.append(f"roundtrip + homomorphism on {count} random forms "
                 f"(seed {seed}, prec {prec})")
    return True, lines


SUITES = {
    "sigma": suite_sigma,
    "e4-t3": suite_e4_t3,
    "j-t3": suite_j_t3,
    "algebra": suite_algebra,
    "congruence": suite_congruence,
    "logderiv": suite_logderiv,
    "borcherds-equivariance": suite_borcherds_equivariance,
    "hurwitz": suite_hurwitz,
    "roundtrip": suite_roundtrip,
}
