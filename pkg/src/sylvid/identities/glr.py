"""
Gasca / Lopez-Carmona / Ramirez generalization.

For ``n = t + q`` and a chain of ordered column lists ``J_1..J_q`` of size
``t+1`` whose neighbours share ``t`` elements, the matrix
``B[i][k] = M[1..t, t+i; J_k]`` satisfies

    det B = c * det M * prod_k M[1..t; S_k],     S_k = J_k & J_{k+1}.

The sign factor is 0 when the lists do not cover ``N_n``. Otherwise it is
``(-1)^mu`` where ``mu`` is the base exponent
``q(q-1)/2 + sum_k (j_{h_k} - h_k)`` *plus* the inversion count of the
pivot sequence ``(j_{h_1}, ..., j_{h_q})``. The extra term vanishes when
the pivots increase (Sylvester's lists, for instance), and
without it the identity fails whenever they do not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from ..determinants import det_reference, minor_det
from ..errors import ConfigurationError, ShapeError
from ..indexlists import inversions, list_difference, list_intersection, list_union, ordered
from ..matrix import ExactMatrix
from .report import IdentityReport

__all__ = ["GlrConfig", "glr_sign", "glr_matrix", "glr_check", "sylvester_lists"]


@dataclass(frozen=True)
class GlrConfig:
    t: int
    J_lists: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...] = field(init=False)
    J_union: tuple[int, ...] = field(init=False)
    pivots: tuple[int, ...] = field(init=False)
    positions: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        t = self.t
        lists = tuple(ordered(J) for J in self.J_lists)
        object.__setattr__(self, "J_lists", lists)
        q = len(lists)
        if t < 1 or q < 1:
            raise ConfigurationError(f"need t >= 1 and q >= 1, got t={t}, q={q}")
        n = t + q
        for k, J in enumerate(lists, 1):
            if len(J) != t + 1:
                raise ConfigurationError(f"card(J_{k}) = {len(J)}, expected t+1 = {t + 1}")
            if J[-1] > n:
                raise ConfigurationError(f"J_{k} = {J} leaves N_{n}")
        S = tuple(list_intersection(lists[k], lists[k + 1]) for k in range(q - 1))
        for k, Sk in enumerate(S, 1):
            if len(Sk) != t:
                raise ConfigurationError(f"card(J_{k} & J_{k + 1}) = {len(Sk)}, expected t = {t}")
        pivots, positions = [], []
        if q >= 2:
            for k, J in enumerate(lists):
                rest = list_difference(J, S[k - 1] if k else S[0])
                if len(rest) != 1:
                    raise ConfigurationError(f"J_{k + 1} minus its shared list leaves {rest}, expected one index")
                pivots.append(rest[0])
                positions.append(J.index(rest[0]) + 1)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "J_union", reduce(list_union, lists, ()))
        object.__setattr__(self, "pivots", tuple(pivots))
        object.__setattr__(self, "positions", tuple(positions))

    @property
    def q(self) -> int:
        return len(self.J_lists)

    @property
    def n(self) -> int:
        return self.t + self.q

    @property
    def mu_base(self) -> int:
        """``q(q-1)/2 + sum (j_{h_k} - h_k)``; 0 for q = 1."""
        if self.q < 2:
            return 0
        q = self.q
        return q * (q - 1) // 2 + sum(j - h for j, h in zip(self.pivots, self.positions))

    @property
    def pivot_inversions(self) -> int:
        return inversions(self.pivots)


def sylvester_lists(t: int, q: int) -> GlrConfig:
    """``J_k = (1..t, t+k)``, the lists that reduce the identity to Sylvester's."""
    return GlrConfig(t, tuple(tuple(range(1, t + 1)) + (t + k,) for k in range(1, q + 1)))


def glr_sign(cfg: GlrConfig) -> tuple[int, int]:
    """``(c, mu)`` with ``mu`` the base exponent; see the module docstring for c."""
    mu = cfg.mu_base
    if len(cfg.J_union) < cfg.n:
        return 0, mu
    if cfg.q == 1:
        return 1, mu
    return (-1 if (mu + cfg.pivot_inversions) & 1 else 1), mu


def glr_matrix(M: ExactMatrix, cfg: GlrConfig) -> ExactMatrix:
    t, q = cfg.t, cfg.q
    lead = tuple(range(1, t + 1))
    return ExactMatrix(
        [[minor_det(M, lead + (t + i,), J) for J in cfg.J_lists] for i in range(1, q + 1)],
        cols=q,
    )


def glr_check(M: ExactMatrix, cfg: GlrConfig) -> IdentityReport:
    if not M.is_square or M.rows != cfg.n:
        raise ShapeError(f"glr_check needs a square matrix of order t+q = {cfg.n}, got {M.rows}x{M.cols}")
    c, mu = glr_sign(cfg)
    lhs = det_reference(glr_matrix(M, cfg))
    rhs = c * det_reference(M)
    lead = tuple(range(1, cfg.t + 1))
    for Sk in cfg.S:
        if not rhs:
            break
        rhs *= minor_det(M, lead, Sk)
    notes = []
    if cfg.q == 1:
        notes.append("q=1: no shared lists, c fixed to +1")
    if c and cfg.pivot_inversions & 1:
        notes.append("pivot sequence has odd inversion count; c differs from (-1)^mu")
    params = {
        "n": cfg.n,
        "t": cfg.t,
        "q": cfg.q,
        "J_lists": list(cfg.J_lists),
        "S": list(cfg.S),
        "pivots": cfg.pivots,
        "positions": cfg.positions,
        "mu": mu,
        "pivot_inversions": cfg.pivot_inversions,
        "c": c,
    }
    return IdentityReport("glr", params, lhs, rhs, "; ".join(notes))
