"""Division-free checkers for Sylvester's identity and its generalizations."""

from .bgm import (
    BgmConfig,
    bgm_bordered_minor,
    bgm_build_B,
    bgm_corollary_checks,
    bgm_ratio_constancy,
)
from .classical import block_rule_check, bordered_minor_matrix, chio_condense, sylvester_check
from .glr import GlrConfig, glr_check, glr_matrix, glr_sign, sylvester_lists
from .mulders import mulders_check, mulders_pair_det, mulders_tilde, mulders_tilde_matrix
from .newgen import (
    newgen_B,
    newgen_block_check,
    newgen_chain,
    newgen_check,
    newgen_q,
    newgen_s2_check,
)
from .report import IdentityReport
from .yakovlev import yakovlev_check, yakovlev_parity_sign

__all__ = [
    "IdentityReport",
    "sylvester_check",
    "chio_condense",
    "block_rule_check",
    "bordered_minor_matrix",
    "yakovlev_check",
    "yakovlev_parity_sign",
    "GlrConfig",
    "glr_sign",
    "glr_matrix",
    "glr_check",
    "sylvester_lists",
    "BgmConfig",
    "bgm_build_B",
    "bgm_bordered_minor",
    "bgm_corollary_checks",
    "bgm_ratio_constancy",
    "mulders_pair_det",
    "mulders_tilde",
    "mulders_tilde_matrix",
    "mulders_check",
    "newgen_q",
    "newgen_chain",
    "newgen_B",
    "newgen_check",
    "newgen_s2_check",
    "newgen_block_check",
]
