"""Mulders' pair-class generalization.

``a^[P]`` is the determinant of the rows and columns of the pairs in ``P``,
in pair order. ``a~_{i,j}^{(t)}`` updates the diagonal class
``[(1,1)..(t,t)]`` with the single pair ``(i, j)``, which covers bordered
minors for ``i, j > t`` and the degenerate cases ``i <= t`` or ``j <= t``.
"""

from __future__ import annotations

from fractions import Fraction

from ..determinants import det_reference, minor_det
from ..errors import DomainError
from ..indexlists import PairClass, pairclass_arrow
from ..matrix import ExactMatrix
from .report import IdentityReport

__all__ = ["mulders_pair_det", "mulders_tilde", "mulders_tilde_matrix", "mulders_check"]


def mulders_pair_det(M: ExactMatrix, pc: PairClass) -> Fraction:
    """``a^[pc]``; 1 for the empty class, 0 when a column repeats."""
    cols = pc.cols
    if len(set(cols)) != len(cols):
        return Fraction(0)
    return minor_det(M, pc.rows, cols)


def mulders_tilde(M: ExactMatrix, t: int, i: int, j: int) -> Fraction:
    return mulders_pair_det(M, pairclass_arrow(PairClass.diagonal(t), PairClass([(i, j)])))


def mulders_tilde_matrix(M: ExactMatrix, t: int, p: int, q: int, s: int) -> ExactMatrix:
    """``[a~_{p+i, q+j}^{(t)}]`` for i, j = 1..s."""
    return ExactMatrix(
        [[mulders_tilde(M, t, p + i, q + j) for j in range(1, s + 1)] for i in range(1, s + 1)],
        cols=s,
    )


def mulders_check(M: ExactMatrix, t: int, p: int, q: int, s: int) -> IdentityReport:
    """``a^[diag_t <- [(p+1,q+1)..(p+s,q+s)]] * (a~_{t,t}^{(t-1)})^(s-1) == det [a~_{p+i,q+j}^{(t)}]``.

    ``a~_{t,t}^{(t-1)}`` is the leading ``t x t`` minor, taken as 1 for t = 0.
    """
    n, m = M.shape
    if not 0 <= t <= min(n, m):
        raise DomainError(f"t={t} outside 0..{min(n, m)}")
    if not (0 <= p <= t and 0 <= q <= t):
        raise DomainError(f"p={p}, q={q} must lie in 0..t={t}")
    if not 1 <= s <= min(n - p, m - q):
        raise DomainError(f"s={s} outside 1..{min(n - p, m - q)}")
    update = PairClass((p + k, q + k) for k in range(1, s + 1))
    big = pairclass_arrow(PairClass.diagonal(t), update)
    lead = tuple(range(1, t + 1))
    pivot = minor_det(M, lead, lead)
    lhs = mulders_pair_det(M, big) * pivot ** (s - 1)
    rhs = det_reference(mulders_tilde_matrix(M, t, p, q, s))
    return IdentityReport(
        "mulders", {"n": n, "m": m, "t": t, "p": p, "q": q, "s": s, "pairs": big}, lhs, rhs
    )
