"""Ordered index lists, signed permutations, pair classes, and the two sign corrections."""

from sylvid.determinants import det_reference, minor_det
from sylvid.identities import GlrConfig, glr_check, glr_sign, yakovlev_check
from sylvid.indexlists import PairClass, enumerate_permutations, list_complement, list_intersection, pairclass_arrow
from sylvid.rng import random_int_matrix, trial_rng

print("(1,3,4) & (1,4,5) =", list_intersection((1, 3, 4), (1, 4, 5)))
print("N_6 minus (1,3,5,6) =", list_complement((1, 3, 5, 6), 6))
for p in enumerate_permutations((6, 7, 8)):
    print(p.arrangement, "inversions", p.inversions, "sign", p.sign)

X = PairClass([(2, 1), (3, 3), (1, 5), (5, 3)])
print(X, "<-", PairClass([(1, 1), (2, 3), (4, 4)]), "=", pairclass_arrow(X, PairClass([(1, 1), (2, 3), (4, 4)])))

M = random_int_matrix(trial_rng(2024, 0), 6, 6, -9, 9)

# arbitrary row and column lists: holds once the parity factor of the reordering is included
for I, J in [((1, 3, 5, 6), (1, 2, 4, 6)), ((1, 2), (1, 3))]:
    r = yakovlev_check(M, I, J)
    print(r.summary())

# chains of column lists: c = 0 when the lists do not cover 1..n
M5 = random_int_matrix(trial_rng(2024, 1), 5, 5, -9, 9)
for lists in [((1, 3, 4), (1, 4, 5), (2, 4, 5)), ((1, 2, 3), (2, 3, 4), (1, 2, 4))]:
    cfg = GlrConfig(2, lists)
    print("c, mu =", glr_sign(cfg), "|", glr_check(M5, cfg).summary())

# out-of-order pivots: (-1)^mu alone gives the wrong sign, the inversion term fixes it
cfg = GlrConfig(1, ((2, 3), (1, 2)))
M3 = random_int_matrix(trial_rng(2024, 2), 3, 3, -9, 9)
c, mu = glr_sign(cfg)
r = glr_check(M3, cfg)
print("pivots", cfg.pivots, "mu", mu, "c", c, "| det B =", r.lhs, "| (-1)^mu det M M[1;2] =",
      (-1) ** mu * det_reference(M3) * minor_det(M3, (1,), (2,)))
