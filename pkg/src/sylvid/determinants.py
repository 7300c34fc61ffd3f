"""
Two independent determinant engines and the bordered minors they share.

``det_reference`` is a memoised cofactor (Laplace) expansion and serves as
the oracle. ``det_bareiss`` is one-step fraction-free elimination without
pivoting; its intermediates are exactly the bordered minors returned by
``extended_minor``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, DomainError, PivotError, ShapeError
from .matrix import ExactMatrix, _integer_rows, submatrix

__all__ = [
    "REFERENCE_CAP",
    "det_reference",
    "minor_det",
    "extended_minor",
    "leading_minor",
    "det_bareiss",
    "Division",
    "EliminationTrace",
]

REFERENCE_CAP = 10


def _cofactor_det(rows: list[list[int]]) -> int:
    # Laplace expansion along successive rows, memoised on the set of
    # still-available columns (bitmask). O(n 2^n) instead of O(n!).
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    last = rows[n - 1]
    level = {1 << j: last[j] for j in range(n) if last[j]}
    for r in range(n - 2, -1, -1):
        row = rows[r]
        nxt: dict[int, int] = {}
        for mask, value in level.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit or not row[j]:
                    continue
                # position of column j among the columns of mask|bit
                term = row[j] * value
                if bin(mask & (bit - 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                nxt[key] = nxt.get(key, 0) + term
        level = nxt
    return level.get((1 << n) - 1, 0)


def det_reference(M: ExactMatrix, cap: int = REFERENCE_CAP) -> Fraction:
    """Exact determinant by cofactor expansion; the oracle for every other path."""
    if not M.is_square:
        raise ShapeError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows > cap:
        raise CapacityError(f"order {M.rows} exceeds the reference cap {cap}")
    rows, scale = _integer_rows(M)
    return Fraction(_cofactor_det(rows), scale)


def minor_det(M: ExactMatrix, I: Sequence[int], J: Sequence[int], cap: int = REFERENCE_CAP) -> Fraction:
    """``M[I; J]``: determinant of rows ``I`` and columns ``J`` in listed order.

    The empty minor is 1.
    """
    if len(I) != len(J):
        raise ShapeError(f"minor needs equal list lengths, got {len(I)} rows and {len(J)} columns")
    if not I:
        return Fraction(1)
    return det_reference(submatrix(M, I, J), cap=cap)


def extended_minor(M: ExactMatrix, t: int, i: int, j: int) -> Fraction:
    """Bordered minor ``a_{i,j}^{(t)}``: the leading ``t x t`` block extended by row i, column j."""
    if not 0 <= t <= min(M.rows, M.cols) - 1:
        raise DomainError(f"t={t} outside 0..{min(M.rows, M.cols) - 1}")
    if not (t < i <= M.rows and t < j <= M.cols):
        raise DomainError(
            f"extended_minor needs t < i <= {M.rows} and t < j <= {M.cols}; got t={t}, i={i}, j={j}"
        )
    lead = list(range(1, t + 1))
    return minor_det(M, lead + [i], lead + [j])


def leading_minor(M: ExactMatrix, t: int) -> Fraction:
    """Leading principal minor of order ``t`` (1 for t = 0)."""
    lead = list(range(1, t + 1))
    return minor_det(M, lead, lead)


@dataclass(frozen=True)
class Division:
    dividend: Fraction
    divisor: Fraction
    # None when the input was not integral and exactness is meaningless
    exact: bool | None


@dataclass(frozen=True)
class EliminationTrace:
    """Every intermediate of a fraction-free elimination.

    ``steps[t]`` is ``(t, A_t)``; for ``i, j > t`` the entry ``A_t[i, j]``
    is the bordered minor ``a_{i,j}^{(t)}``. Rows ``<= t`` keep the values
    they had when they served as pivot rows, entries below a used pivot
    are zero.
    """

    steps: tuple[tuple[int, ExactMatrix], ...]
    divisions: tuple[Division, ...] = field(default=())

    @property
    def pivots(self) -> tuple[Fraction, ...]:
        """Diagonal ``a_{k,k}^{(k-1)}`` for k = 1..n (the leading minors)."""
        if not self.steps:
            return ()
        n = self.steps[-1][1].rows
        return tuple(self.steps[min(k - 1, len(self.steps) - 1)][1][k, k] for k in range(1, n + 1))

    @property
    def all_exact(self) -> bool:
        return all(d.exact is not False for d in self.divisions)


def det_bareiss(M: ExactMatrix) -> tuple[Fraction, EliminationTrace]:
    """One-step Bareiss elimination, no pivoting.

    Raises :class:`PivotError` carrying the partial trace when the leading
    minor of some order ``k < n`` vanishes.
    """
    if not M.is_square:
        raise ShapeError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1), EliminationTrace(steps=((0, M),))
    integral = M.is_integral
    if integral:
        A = [[x.numerator for x in row] for row in M.to_lists()]
    else:
        A = M.to_lists()
    steps = [(0, M)]
    divisions = []
    prev = 1
    for k in range(n - 1):
        pivot = A[k][k]
        if pivot == 0:
            trace = EliminationTrace(tuple(steps), tuple(divisions))
            raise PivotError(f"leading minor of order {k + 1} vanishes", order=k + 1, trace=trace)
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                if integral:
                    q, r = divmod(num, prev)
                    divisions.append(Division(Fraction(num), Fraction(prev), r == 0))
                    row_i[j] = q
                else:
                    divisions.append(Division(num, Fraction(prev), None))
                    row_i[j] = num / prev
            row_i[k] = 0
        prev = pivot
        steps.append((k + 1, ExactMatrix(A, cols=n)))
    return Fraction(A[n - 1][n - 1]), EliminationTrace(tuple(steps), tuple(divisions))
