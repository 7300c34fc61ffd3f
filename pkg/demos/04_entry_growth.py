"""Entry growth: fraction-free elimination against rational elimination without cancellation."""

from sylvid import ExactMatrix
from sylvid.fraction_free import average_growth, bareiss_certified, growth_report, growth_tsv
from sylvid.rng import random_int_matrix, trial_rng

# every intermediate is a bordered minor and every division is exact
M = random_int_matrix(trial_rng(3, 0), 6, 6, -99, 99)
det, trace = bareiss_certified(M)
print("det =", det, "| divisions exact:", trace.all_exact)

# averaged over 20 random order-8 matrices
stats = [growth_report(random_int_matrix(trial_rng(3, k), 8, 8, -99, 99)) for k in range(1, 21)]
print(growth_tsv(average_growth(stats)))

# scaled Hilbert matrix: small determinant, large naive intermediates
n, L = 6, 27720
H = ExactMatrix([[L // (i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)])
print(growth_tsv(growth_report(H)))
