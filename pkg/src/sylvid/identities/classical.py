"""Classical Sylvester identity, Chio condensation and the 2x2 block rule."""

from __future__ import annotations

from ..determinants import det_reference, extended_minor, leading_minor, minor_det
from ..errors import DomainError, PivotError, ShapeError
from ..matrix import ExactMatrix
from .report import IdentityReport

__all__ = ["bordered_minor_matrix", "sylvester_check", "chio_condense", "block_rule_check"]


def _require_square(M: ExactMatrix, what: str):
    if not M.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {M.rows}x{M.cols}")


def bordered_minor_matrix(M: ExactMatrix, t: int) -> ExactMatrix:
    """The ``(n-t) x (n-t)`` matrix of ``a_{i,j}^{(t)}``, i, j = t+1..n."""
    n = M.rows
    return ExactMatrix(
        [[extended_minor(M, t, i, j) for j in range(t + 1, n + 1)] for i in range(t + 1, n + 1)],
        cols=n - t,
    )


def sylvester_check(M: ExactMatrix, t: int) -> IdentityReport:
    """``det M * (a_{t,t}^{(t-1)})^(n-t-1) == det [a_{i,j}^{(t)}]``."""
    _require_square(M, "sylvester_check")
    n = M.rows
    if not 0 <= t <= n - 1:
        raise DomainError(f"t={t} outside 0..{n - 1}")
    lhs = det_reference(M) * leading_minor(M, t) ** (n - t - 1)
    rhs = det_reference(bordered_minor_matrix(M, t))
    return IdentityReport("sylvester", {"n": n, "t": t}, lhs, rhs)


def chio_condense(M: ExactMatrix) -> tuple[ExactMatrix, IdentityReport]:
    """Condense by the 2x2 minors on ``a_11``; report ``det B == det M * a_11^(n-2)``."""
    _require_square(M, "chio_condense")
    n = M.rows
    if n < 2:
        raise ShapeError("chio_condense needs order >= 2")
    a11 = M[1, 1]
    if a11 == 0:
        raise PivotError("Chio condensation needs a_11 != 0", order=1)
    B = bordered_minor_matrix(M, 1)
    lhs = det_reference(B)
    rhs = det_reference(M) * a11 ** (n - 2)
    return B, IdentityReport("chio", {"n": n, "a11": a11}, lhs, rhs)


def block_rule_check(M: ExactMatrix) -> IdentityReport:
    """``det M det D == det A' det D' - det B' det C'`` with D the central block.

    A' drops the last row and column, D' the first row and column, B' the
    last row and first column, C' the first row and last column.
    """
    _require_square(M, "block_rule_check")
    n = M.rows
    if n < 2:
        raise ShapeError("block_rule_check needs order >= 2")
    head = list(range(1, n))
    tail = list(range(2, n + 1))
    core = list(range(2, n))
    lhs = det_reference(M) * minor_det(M, core, core)
    rhs = minor_det(M, head, head) * minor_det(M, tail, tail) - minor_det(M, head, tail) * minor_det(
        M, tail, head
    )
    return IdentityReport("block", {"n": n}, lhs, rhs)
