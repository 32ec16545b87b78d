"""Test-only utilities.

`naive_rref` is a deliberately boring textbook Gauss-Jordan over `Fraction`,
kept independent of the package's elimination code so the two can be checked
against each other.
"""

from __future__ import annotations

import random
from fractions import Fraction

from jacsyz.graded import monomial_basis
from jacsyz.poly import HomogPoly


def naive_rref(
    rows: list[list[Fraction]], ncols: int
) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        hit = next((i for i in range(r, len(m)) if m[i][c]), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    nonzero = [row for row in m if any(row)]
    zero = [row for row in m if not any(row)]
    return nonzero + zero, pivots


def random_dense_homogeneous(
    rng: random.Random, nvars: int, degree: int, lo: int = -5, hi: int = 5
) -> HomogPoly:
    """Dense form with integer coefficients drawn from [lo, hi]; never zero."""
    while True:
        terms = {
            e: Fraction(rng.randint(lo, hi)) for e in monomial_basis(nvars, degree)
        }
        f = HomogPoly(nvars, degree, terms)
        if not f.is_zero:
            return f


def random_matrix(
    rng: random.Random, nrows: int, ncols: int, lo: int = -9, hi: int = 9
) -> list[list[Fraction]]:
    return [
        [Fraction(rng.randint(lo, hi)) for _ in range(ncols)] for _ in range(nrows)
    ]
