"""
Beckermann / Gasca / Muhlbach identity, checked behaviourally.

For lists ``I_k``, ``J_k`` with ``card(J_k) = card(I_k) + 1`` and
row vectors ``z_1..z_q``, the matrix ``B[i][j] = M[I_i | z_j; J_i]`` has

    det B = c * M[I_0 | z_1..z_q; J^(q)]

for a constant ``c`` that depends on ``M`` but not on the ``z``. Since ``c``
has no closed form in general, the checks here test its constancy across
random ``z`` draws and the two corollaries that force ``det B = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction

from ..determinants import det_reference, minor_det
from ..errors import ConfigurationError, ShapeError
from ..indexlists import list_intersection, list_union, ordered
from ..matrix import ExactMatrix
from ..rng import random_int_matrix, trial_rng
from .report import IdentityReport

__all__ = [
    "BgmConfig",
    "bgm_stack",
    "bgm_build_B",
    "bgm_bordered_minor",
    "bgm_corollary_checks",
    "bgm_ratio_constancy",
    "Z_RANGE",
]

Z_RANGE = (-9, 9)


@dataclass(frozen=True)
class BgmConfig:
    """Index lists for the identity plus an optional ``q x m`` matrix ``Z`` of border rows.

    ``I0`` defaults to the first ``card(J^(q)) - q`` elements of ``I^(q)``
    and is ``None`` when no such subset exists (then only the corollaries
    can be checked).
    """

    I_lists: tuple[tuple[int, ...], ...]
    J_lists: tuple[tuple[int, ...], ...]
    I0: tuple[int, ...] | None = None
    Z: ExactMatrix | None = None
    I_meet: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    J_union: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        I_lists = tuple(ordered(I) for I in self.I_lists)
        J_lists = tuple(ordered(J) for J in self.J_lists)
        if len(I_lists) != len(J_lists) or not I_lists:
            raise ConfigurationError("need q >= 1 row lists and as many column lists")
        for k, (I, J) in enumerate(zip(I_lists, J_lists), 1):
            if len(J) != len(I) + 1:
                raise ConfigurationError(f"card(J_{k}) = {len(J)} must be card(I_{k}) + 1 = {len(I) + 1}")
        meets = tuple(itertools.accumulate(I_lists, list_intersection))
        unions = tuple(itertools.accumulate(J_lists, list_union))
        object.__setattr__(self, "I_lists", I_lists)
        object.__setattr__(self, "J_lists", J_lists)
        object.__setattr__(self, "I_meet", meets)
        object.__setattr__(self, "J_union", unions)
        need = len(unions[-1]) - len(I_lists)
        if self.I0 is None:
            if 0 <= need <= len(meets[-1]):
                object.__setattr__(self, "I0", meets[-1][:need])
        else:
            I0 = ordered(self.I0)
            if len(I0) != need or not set(I0) <= set(meets[-1]):
                raise ConfigurationError(
                    f"I0 must be a subset of I^(q) = {meets[-1]} of size card(J^(q)) - q = {need}"
                )
            object.__setattr__(self, "I0", I0)
        if self.Z is not None and self.Z.rows != self.q:
            raise ShapeError(f"Z must have q = {self.q} rows, got {self.Z.rows}")

    @property
    def q(self) -> int:
        return len(self.I_lists)

    def with_z(self, Z: ExactMatrix) -> "BgmConfig":
        return replace(self, Z=Z)

    def corollary(self) -> str | None:
        """Which corollary forces ``det B = 0``, if any."""
        if len(self.J_union[-1]) < self.q:
            return "corollary 2"
        for k in range(2, self.q + 1):
            if len(self.I_meet[k - 1]) > len(self.J_union[k - 1]) - k:
                return "corollary 1"
        return None


def _check_dims(M: ExactMatrix, cfg: BgmConfig):
    rows = max((I[-1] for I in cfg.I_lists if I), default=0)
    cols = max(J[-1] for J in cfg.J_lists)
    if rows > M.rows or cols > M.cols:
        raise ShapeError(f"lists reach row {rows} / column {cols} of a {M.rows}x{M.cols} matrix")
    if cfg.Z is None:
        raise ConfigurationError("border rows Z are not set")
    if cfg.Z.cols != M.cols:
        raise ShapeError(f"Z has {cfg.Z.cols} columns, M has {M.cols}")


def bgm_stack(M: ExactMatrix, Z: ExactMatrix) -> ExactMatrix:
    """``M`` with the rows of ``Z`` appended; row ``n + k`` is ``z_k``."""
    return ExactMatrix(M.to_lists() + Z.to_lists(), cols=M.cols)


def bgm_build_B(M: ExactMatrix, cfg: BgmConfig) -> ExactMatrix:
    _check_dims(M, cfg)
    stack = bgm_stack(M, cfg.Z)
    n, q = M.rows, cfg.q
    return ExactMatrix(
        [[minor_det(stack, I + (n + j,), J) for j in range(1, q + 1)] for I, J in zip(cfg.I_lists, cfg.J_lists)],
        cols=q,
    )


def bgm_bordered_minor(M: ExactMatrix, cfg: BgmConfig) -> Fraction:
    """``M[I_0 | z_1..z_q; J^(q)]``."""
    _check_dims(M, cfg)
    if cfg.I0 is None:
        raise ConfigurationError("no admissible I0: card(J^(q)) - q is negative or exceeds card(I^(q))")
    n, q = M.rows, cfg.q
    stack = bgm_stack(M, cfg.Z)
    return minor_det(stack, cfg.I0 + tuple(range(n + 1, n + q + 1)), cfg.J_union[-1])


def _params(cfg: BgmConfig, **extra) -> dict:
    params = {
        "q": cfg.q,
        "I_lists": list(cfg.I_lists),
        "J_lists": list(cfg.J_lists),
        "I_meet": cfg.I_meet[-1],
        "J_union": cfg.J_union[-1],
        "I0": cfg.I0,
    }
    params.update(extra)
    return params


def bgm_corollary_checks(M: ExactMatrix, cfg: BgmConfig) -> IdentityReport:
    """``det B = 0`` whenever a corollary applies; otherwise "not applicable"."""
    which = cfg.corollary()
    if which is None:
        return IdentityReport(
            "bgm-corollary",
            _params(cfg),
            Fraction(0),
            Fraction(0),
            "neither corollary applies to these lists",
            status="not applicable",
        )
    det_b = det_reference(bgm_build_B(M, cfg))
    return IdentityReport("bgm-corollary", _params(cfg, corollary=which), det_b, Fraction(0), which)


def draw_z(q: int, m: int, seed: int, draw: int) -> ExactMatrix:
    return random_int_matrix(trial_rng(seed, draw), q, m, *Z_RANGE)


def bgm_ratio_constancy(M: ExactMatrix, cfg: BgmConfig, trials: int = 5, seed: int = 0) -> IdentityReport:
    """Check that ``det B / M[I_0 | z; J^(q)]`` is the same for ``trials`` random ``Z``.

    Compared pairwise in cross-multiplied form. The recovered constant is
    reported as ``params["c"]`` when some bordered minor is nonzero.
    """
    if cfg.I0 is None:
        raise ConfigurationError("ratio constancy needs I0 with card(I0) = card(J^(q)) - q")
    if trials < 2:
        raise ConfigurationError("ratio constancy needs at least two draws")
    pairs = []
    for d in range(trials):
        drawn = cfg.with_z(draw_z(cfg.q, M.cols, seed, d))
        pairs.append((det_reference(bgm_build_B(M, drawn)), bgm_bordered_minor(M, drawn)))
    ratio = next((b / m for b, m in pairs if m), None)
    extra = {"trials": trials, "seed": seed, "c": ratio}
    if ratio is None:
        bad = next(((b, m) for b, m in pairs if b), None)
        if bad:
            return IdentityReport(
                "bgm", _params(cfg, **extra), bad[0], Fraction(0), "det B nonzero while every bordered minor vanishes"
            )
        return IdentityReport(
            "bgm",
            _params(cfg, **extra),
            Fraction(0),
            Fraction(0),
            "every bordered minor vanished; the constant is not determined",
            status="inconclusive",
        )
    lhs = rhs = Fraction(0)
    for (ba, ma), (bb, mb) in itertools.combinations(pairs, 2):
        lhs, rhs = ba * mb, bb * ma
        if lhs != rhs:
            break
    return IdentityReport("bgm", _params(cfg, **extra), lhs, rhs)
