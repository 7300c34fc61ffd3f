"""Sylvester's identity with arbitrary ordered row and column lists.

The bordered minors ``M[I, i'; J, j']`` append the extra row and column
after ``I`` and ``J``, so ``M`` is effectively read with its rows ordered as
``(I, I')`` and its columns as ``(J, J')``. That reordering multiplies the
determinant by ``(-1)^(sum(I) + sum(J))``; the check carries this factor on
the left-hand side. When ``I`` and ``J`` have sums of equal parity it is 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..determinants import det_reference, minor_det
from ..errors import DomainError, ShapeError
from ..indexlists import enumerate_permutations, list_complement, ordered
from ..matrix import ExactMatrix
from .report import IdentityReport

__all__ = ["yakovlev_check", "yakovlev_parity_sign"]


def yakovlev_parity_sign(I, J) -> int:
    return -1 if (sum(I) + sum(J)) & 1 else 1


def yakovlev_check(M: ExactMatrix, I, J) -> IdentityReport:
    if not M.is_square:
        raise ShapeError(f"yakovlev_check needs a square matrix, got {M.rows}x{M.cols}")
    I, J = ordered(I), ordered(J)
    if len(I) != len(J):
        raise ShapeError(f"card(I)={len(I)} differs from card(J)={len(J)}")
    n, t = M.rows, len(I)
    if not 0 < t <= n - 1:
        raise DomainError(f"t=card(I)={t} outside 1..{n - 1}")
    if I[-1] > n or J[-1] > n:
        raise DomainError(f"index lists exceed the order {n}")
    Ic, Jc = list_complement(I, n), list_complement(J, n)
    k = n - t
    # bordered[a][b] = M[I, i'_a; J, j'_b]
    bordered = [[minor_det(M, I + (ic,), J + (jc,)) for jc in Jc] for ic in Ic]
    rhs = Fraction(0)
    for perm in enumerate_permutations(range(k)):
        term = perm.sign
        for b, a in enumerate(perm.arrangement):
            term *= bordered[a][b]
            if not term:
                break
        rhs += term
    eps = yakovlev_parity_sign(I, J)
    lhs = eps * det_reference(M) * minor_det(M, I, J) ** (k - 1)
    notes = "" if eps == 1 else "parity factor (-1)^(sum(I)+sum(J)) = -1 applied to lhs"
    return IdentityReport(
        "yakovlev",
        {"n": n, "t": t, "I": I, "J": J, "I_complement": Ic, "J_complement": Jc, "sign": eps},
        lhs,
        rhs,
        notes,
    )
