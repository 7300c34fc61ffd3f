"""Proportionality with random border rows, pair-class minors, and the block-iterated identity."""

from sylvid.determinants import leading_minor
from sylvid.identities import (
    BgmConfig,
    bgm_corollary_checks,
    bgm_ratio_constancy,
    mulders_check,
    newgen_block_check,
    newgen_check,
    newgen_q,
    newgen_s2_check,
)
from sylvid.identities.bgm import draw_z
from sylvid.rng import random_int_matrix, trial_rng

M = random_int_matrix(trial_rng(7, 0), 6, 7, -9, 9)

# det B / M[I0 | z; J^(q)] does not depend on the border rows z
cfg = BgmConfig(((2, 3, 4), (2, 4), (1, 2, 4)), ((2, 3, 4, 5), (2, 3, 4), (2, 3, 4, 7)))
print(bgm_ratio_constancy(M, cfg, trials=5, seed=1).summary())

# too few columns in the union: det B vanishes for every z
cfg2 = BgmConfig(((1, 4), (3, 4), (2, 4), (4, 5), (4, 6)), ((1, 2, 4), (1, 4, 7), (1, 2, 7), (1, 4, 7), (1, 2, 7)))
for d in range(3):
    print(bgm_corollary_checks(M, cfg2.with_z(draw_z(cfg2.q, 7, 5, d))).summary())

# Sylvester's lists: the constant is the leading minor to the power q - 1
S = random_int_matrix(trial_rng(7, 1), 5, 5, -9, 9)
sylv = BgmConfig(((1, 2),) * 3, ((1, 2, 3), (1, 2, 4), (1, 2, 5)))
r = bgm_ratio_constancy(S, sylv, trials=4, seed=2)
print("c =", r.params["c"], "leading minor squared =", leading_minor(S, 2) ** 2)

# pair-class identity on a 7x8 matrix
R = random_int_matrix(trial_rng(7, 2), 7, 8, -9, 9)
print(mulders_check(R, 5, 3, 4, 3).summary())
print(mulders_check(R, 6, 2, 3, 3).summary())

# block-iterated Sylvester, every stage, on a 10x10 matrix with 2x2 blocks
T = random_int_matrix(trial_rng(7, 3), 10, 10, -9, 9)
for k in range(newgen_q(T, 2, 2) + 1):
    print(newgen_check(T, 2, 2, k).summary())
print(newgen_s2_check(random_int_matrix(trial_rng(7, 4), 9, 9, -9, 9), 3).summary())
print(newgen_block_check(random_int_matrix(trial_rng(7, 5), 8, 8, -9, 9), 4).summary())
