"""
Sylvester's identity iterated over blocks of ``s`` rows and columns.

With ``min(n, m) = t + q*s`` the leading principal submatrices
``M_k`` of order ``m_k = t + k*s`` satisfy, for every ``0 <= k <= q``,
a product relation between ``det M_k``, ``det M_0`` and the ``s x s``
bordered-minor blocks ``B_0 .. B_{k-1}``. Each stage is Sylvester's
identity applied to ``M_{k+1}`` with ``M_k`` as its leading block; the
alternating exponents ``(s-1)^(k-1-i)`` come from substituting one stage
into the next. All checks here are cross-multiplied, so singular
``M_0`` or ``B_i`` give valid ``0 == 0`` verifications.
"""

from __future__ import annotations

from fractions import Fraction

from ..determinants import det_reference, extended_minor, leading_minor
from ..errors import CapacityError, ConfigurationError, DomainError, ShapeError
from ..matrix import ExactMatrix, submatrix
from .report import IdentityReport

__all__ = [
    "EXPONENT_BITS_CAP",
    "newgen_q",
    "newgen_chain",
    "newgen_B",
    "newgen_check",
    "newgen_s2_check",
    "newgen_block_permutation",
    "newgen_block_check",
]

EXPONENT_BITS_CAP = 1 << 20


def newgen_q(M: ExactMatrix, t: int, s: int) -> int:
    """Number of stages ``q`` with ``min(n, m) = t + q*s``."""
    n, m = M.shape
    r = min(n, m)
    if not 0 < t < r:
        raise ConfigurationError(f"t={t} must satisfy 0 < t < min(n, m) = {r}")
    if not 1 <= s <= r - t:
        raise ConfigurationError(f"s={s} outside 1..{r - t}")
    if (r - t) % s:
        raise ConfigurationError(f"min(n, m) - t = {r - t} is not a multiple of s={s}")
    return (r - t) // s


def newgen_chain(M: ExactMatrix, t: int, s: int) -> list[ExactMatrix]:
    """``[M_0, ..., M_q]``, the leading principal submatrices of order ``t + k*s``."""
    q = newgen_q(M, t, s)
    return [submatrix(M, range(1, t + k * s + 1), range(1, t + k * s + 1)) for k in range(q + 1)]


def newgen_B(M: ExactMatrix, t: int, s: int, k: int) -> ExactMatrix:
    """``B_k[i][j] = a_{m_k+i, m_k+j}^{(m_k)}`` with ``m_k = t + k*s``."""
    q = newgen_q(M, t, s)
    if not 0 <= k <= q - 1:
        raise DomainError(f"stage k={k} outside 0..{q - 1}")
    mk = t + k * s
    return ExactMatrix(
        [[extended_minor(M, mk, mk + i, mk + j) for j in range(1, s + 1)] for i in range(1, s + 1)],
        cols=s,
    )


def _power(base: Fraction, exponent: int, cap: int) -> Fraction:
    size = max(base.numerator.bit_length(), base.denominator.bit_length(), 1)
    if exponent and base and size * exponent > cap:
        raise CapacityError(f"power with exponent {exponent} would exceed {cap} bits")
    return base**exponent


def newgen_check(
    M: ExactMatrix, t: int, s: int, k: int, cap: int = EXPONENT_BITS_CAP
) -> IdentityReport:
    """Stage ``k`` of the block identity, cross-multiplied.

    Even k:  det M_k * prod_{j even < k-1} (det B_j)^e_j
             == (det M_0)^((s-1)^k) * prod_{i odd <= k-1} (det B_i)^e_i
    Odd k:   det M_k * (det M_0)^((s-1)^k) * prod_{j odd < k-1} (det B_j)^e_j
             == prod_{i even <= k-1} (det B_i)^e_i
    with e_i = (s-1)^(k-1-i) and 0^0 = 1.
    """
    q = newgen_q(M, t, s)
    if not 0 <= k <= q:
        raise DomainError(f"stage k={k} outside 0..{q}")
    mk = t + k * s
    det_mk = leading_minor(M, mk)
    det_m0 = leading_minor(M, t)
    blocks = [det_reference(newgen_B(M, t, s, i)) for i in range(k)]
    head = _power(det_m0, (s - 1) ** k, cap)
    same_parity = Fraction(1)  # blocks with the parity of k, on the det M_k side
    other_parity = Fraction(1)
    for i, b in enumerate(blocks):
        factor = _power(b, (s - 1) ** (k - 1 - i), cap)
        if (k - i) % 2 == 0:
            same_parity *= factor
        else:
            other_parity *= factor
    if k % 2 == 0:
        lhs, rhs = det_mk * same_parity, head * other_parity
        form = "even"
    else:
        lhs, rhs = det_mk * head * same_parity, other_parity
        form = "odd"
    return IdentityReport(
        "newgen", {"n": M.rows, "m": M.cols, "t": t, "s": s, "q": q, "k": k, "form": form}, lhs, rhs
    )


def newgen_s2_check(M: ExactMatrix, t: int) -> IdentityReport:
    """Full-size ``s = 2`` case (``k = q``) on a square matrix with ``n - t`` even."""
    if not M.is_square:
        raise ShapeError(f"newgen_s2_check needs a square matrix, got {M.rows}x{M.cols}")
    if (M.rows - t) % 2:
        raise ConfigurationError(f"n - t = {M.rows - t} must be even")
    q = (M.rows - t) // 2
    r = newgen_check(M, t, 2, q)
    params = dict(r.params, form="q even" if q % 2 == 0 else "q odd")
    return IdentityReport("newgen-s2", params, r.lhs, r.rhs, r.notes)


def newgen_block_permutation(t: int) -> list[int]:
    """Row (and column) order moving the central ``t x t`` block of an order-``t+4`` matrix first."""
    return list(range(3, t + 3)) + [1, 2, t + 3, t + 4]


def newgen_block_check(Mprime: ExactMatrix, t: int) -> IdentityReport:
    """``det M' * det B_0 == det D * det B_1`` with ``D`` the central block of ``M'``.

    ``M'`` is reordered so ``D`` leads; the same permutation on rows and
    columns leaves the determinant unchanged.
    """
    if not Mprime.is_square or Mprime.rows != t + 4:
        raise ShapeError(f"newgen_block_check needs a square matrix of order t+4 = {t + 4}")
    order = newgen_block_permutation(t)
    M = submatrix(Mprime, order, order)
    det_d = leading_minor(M, t)
    b0 = det_reference(newgen_B(M, t, 2, 0))
    b1 = det_reference(newgen_B(M, t, 2, 1))
    lhs = det_reference(Mprime) * b0
    rhs = det_d * b1
    return IdentityReport("newgen-block", {"n": Mprime.rows, "t": t, "order": tuple(order)}, lhs, rhs)
