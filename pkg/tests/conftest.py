"""Shared oracles and strategies.

``leibniz_det`` sums over all permutations and shares no code with the
package's cofactor or Bareiss routines, so it serves as an independent
determinant oracle for small orders.
"""

from fractions import Fraction
from itertools import permutations
from math import prod

import pytest
from hypothesis import strategies as st

from sylvid.matrix import ExactMatrix
from sylvid.rng import random_int_matrix, trial_rng


def perm_sign(p) -> int:
    # parity by cycle decomposition, independent of inversion counting
    seen, sign = set(), 1
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows) -> Fraction:
    n = len(rows)
    return sum(
        (perm_sign(p) * prod((Fraction(rows[i][p[i]]) for i in range(n)), start=Fraction(1)) for p in permutations(range(n))),
        start=Fraction(0),
    )


def seeded(seed, k, rows, cols=None, lo=-9, hi=9) -> ExactMatrix:
    return random_int_matrix(trial_rng(seed, k), rows, rows if cols is None else cols, lo, hi)


@st.composite
def int_matrices(draw, min_n=1, max_n=5, lo=-9, hi=9, square=True):
    n = draw(st.integers(min_n, max_n))
    m = n if square else draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m), min_size=n, max_size=n))
    return ExactMatrix(rows)


@pytest.fixture
def m3():
    """Small fixture whose determinant is -3."""
    return ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
