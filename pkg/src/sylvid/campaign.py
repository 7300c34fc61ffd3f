"""
Seeded verification campaigns.

Trial ``k`` draws everything it needs (matrix order, entries, random index
lists, border-row seeds) from its own generator ``trial_rng(seed, k)``, so
trials can run in any order or in parallel and still produce the same
reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import ConfigurationError, PivotError
from .identities import (
    BgmConfig,
    GlrConfig,
    IdentityReport,
    block_rule_check,
    bgm_corollary_checks,
    bgm_ratio_constancy,
    chio_condense,
    glr_check,
    mulders_check,
    newgen_block_check,
    newgen_check,
    newgen_s2_check,
    sylvester_check,
    sylvester_lists,
    yakovlev_check,
)
from .identities.bgm import draw_z
from .identities.newgen import newgen_q
from .matrix import ExactMatrix
from .rng import XorShiftStar, random_int_matrix, trial_rng

__all__ = ["IDENTITIES", "CheckParams", "CampaignConfig", "default_shape", "check_matrix", "run_campaign"]

IDENTITIES = (
    "sylvester",
    "chio",
    "block",
    "yakovlev",
    "glr",
    "bgm",
    "mulders",
    "newgen",
    "newgen-s2",
    "newgen-block",
)

# default BGM lists: a 6 x 7 matrix, q = 3, with a proportionality constant
BGM_DEFAULT_I = ((2, 3, 4), (2, 4), (1, 2, 4))
BGM_DEFAULT_J = ((2, 3, 4, 5), (2, 3, 4), (2, 3, 4, 7))


@dataclass
class CheckParams:
    t: int | None = None
    s: int | None = None
    p: int | None = None
    q: int | None = None
    k: int | None = None
    I: tuple[int, ...] | None = None
    J: tuple[int, ...] | None = None
    lists: list[tuple[int, ...]] | None = None
    row_lists: list[tuple[int, ...]] | None = None
    draws: int = 5


@dataclass
class CampaignConfig:
    identity: str
    trials: int = 1
    seed: int = 0
    rows: tuple[int, int] | None = None
    cols: tuple[int, int] | None = None
    entries: tuple[int, int] = (-9, 9)
    params: CheckParams = field(default_factory=CheckParams)

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ConfigurationError(f"unknown identity {self.identity!r}")
        if self.trials < 1:
            raise ConfigurationError("trial count must be at least 1")
        if self.entries[0] > self.entries[1]:
            raise ConfigurationError(f"empty entry range {self.entries}")


def default_shape(identity: str, params: CheckParams) -> tuple[int, int]:
    """Matrix dimensions an identity needs when the caller gives none."""
    t = params.t
    if identity == "glr":
        if params.lists:
            return (len(params.lists[0]) - 1 + len(params.lists),) * 2
        t = 2 if t is None else t
        return (t + (params.q or 3),) * 2
    if identity == "bgm":
        return 6, 7
    if identity == "mulders":
        return 7, 8
    if identity == "newgen-block":
        return ((4 if t is None else t) + 4,) * 2
    if identity == "newgen-s2":
        return ((2 if t is None else t) + 4,) * 2
    if identity == "newgen":
        t = 2 if t is None else t
        s = params.s or 2
        return (t + 2 * s,) * 2
    return 5, 5


def _random_ordered(rng: XorShiftStar, n: int, size: int) -> tuple[int, ...]:
    return tuple(sorted(rng.sample(range(1, n + 1), size)))


def check_matrix(identity: str, M: ExactMatrix, params: CheckParams, rng: XorShiftStar | None = None) -> list[IdentityReport]:
    """Run one identity on one matrix; unset parameters are drawn from ``rng`` or defaulted."""
    rng = rng or XorShiftStar(0)
    p = params
    n = M.rows
    if identity == "sylvester":
        ts = [p.t] if p.t is not None else range(n)
        return [sylvester_check(M, t) for t in ts]
    if identity == "chio":
        return [chio_condense(M)[1]]
    if identity == "block":
        return [block_rule_check(M)]
    if identity == "yakovlev":
        if p.I is not None and p.J is not None:
            I, J = p.I, p.J
        else:
            t = p.t if p.t is not None else rng.randint(1, n - 1)
            I, J = _random_ordered(rng, n, t), _random_ordered(rng, n, t)
        return [yakovlev_check(M, I, J)]
    if identity == "glr":
        if p.lists:
            cfg = GlrConfig(len(p.lists[0]) - 1, tuple(p.lists))
        else:
            t = 2 if p.t is None else p.t
            cfg = sylvester_lists(t, n - t)
        return [glr_check(M, cfg)]
    if identity == "bgm":
        cfg = BgmConfig(tuple(p.row_lists or BGM_DEFAULT_I), tuple(p.lists or BGM_DEFAULT_J))
        z_seed = rng.next_u64()
        if cfg.corollary():
            return [bgm_corollary_checks(M, cfg.with_z(draw_z(cfg.q, M.cols, z_seed, 0)))]
        return [bgm_ratio_constancy(M, cfg, trials=p.draws, seed=z_seed)]
    if identity == "mulders":
        t = p.t if p.t is not None else rng.randint(0, min(M.shape) - 1)
        pp = rng.randint(0, t) if p.p is None else p.p
        qq = rng.randint(0, t) if p.q is None else p.q
        s = p.s if p.s is not None else rng.randint(1, min(M.rows - pp, M.cols - qq))
        return [mulders_check(M, t, pp, qq, s)]
    if identity == "newgen":
        t = 2 if p.t is None else p.t
        s = 2 if p.s is None else p.s
        ks = [p.k] if p.k is not None else range(newgen_q(M, t, s) + 1)
        return [newgen_check(M, t, s, k) for k in ks]
    if identity == "newgen-s2":
        return [newgen_s2_check(M, 2 if p.t is None else p.t)]
    if identity == "newgen-block":
        return [newgen_block_check(M, M.rows - 4 if p.t is None else p.t)]
    raise ConfigurationError(f"unknown identity {identity!r}")


@dataclass
class TrialOutcome:
    trial: int
    reports: list[IdentityReport]
    skipped: str | None = None


def run_campaign(cfg: CampaignConfig) -> Iterator[TrialOutcome]:
    """Yield one outcome per trial, in trial order."""
    default_rows, default_cols = default_shape(cfg.identity, cfg.params)
    rows = cfg.rows or (default_rows, default_rows)
    cols = cfg.cols
    for k in range(cfg.trials):
        rng = trial_rng(cfg.seed, k)
        nr = rng.randint(*rows)
        if cols is not None:
            nc = rng.randint(*cols)
        elif cfg.rows is None:
            nc = default_cols
        else:
            nc = nr
        M = random_int_matrix(rng, nr, nc, *cfg.entries)
        try:
            outcome = TrialOutcome(k, check_matrix(cfg.identity, M, cfg.params, rng))
        except PivotError as exc:
            outcome = TrialOutcome(k, [], skipped=str(exc))
        yield outcome
