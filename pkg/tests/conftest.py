import random
from fractions import Fraction

import pytest

from qhecke import QSeries


def random_series(rng: random.Random, prec: int = 15,
                  rational: bool = True) -> QSeries:
    """Random nonzero Laurent series with valuation in [-3, 3]."""
    val = rng.randint(-3, 3)
    coeffs = []
    for _ in range(prec - val):
        if rational:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        else:
            c = Fraction(rng.randint(-9, 9))
        coeffs.append(c)
    if all(c == 0 for c in coeffs):
        coeffs[0] = Fraction(1)
    return QSeries(val, coeffs, prec=prec)


def random_unit(rng: random.Random, prec: int = 15,
                rational: bool = True) -> QSeries:
    """Random series 1 + O(q)."""
    tail = random_series(rng, prec, rational)
    coeffs = [Fraction(1)] + [tail[n] if n < tail.prec else Fraction(0)
                              for n in range(1, prec)]
    return QSeries(0, coeffs, prec=prec)


@pytest.fixture
def rng():
    return random.Random(20240824)
