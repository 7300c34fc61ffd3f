"""Bordered minors, Sylvester's identity and Chio condensation on one small matrix."""

from sylvid import ExactMatrix, det_bareiss, det_reference, extended_minor
from sylvid.identities import block_rule_check, bordered_minor_matrix, chio_condense, sylvester_check

M = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
print("det M =", det_reference(M))

# bordered minors a_{i,j}^(1): the 2x2 minors built on a_11
for i in (2, 3):
    print([str(extended_minor(M, 1, i, j)) for j in (2, 3)])

# Chio condensation is the t = 1 case: one step shrinks the order by one
B, report = chio_condense(M)
print("condensed:", B.to_int_rows(), "|", report.summary())

# Sylvester for every t, checked without any division
for t in range(M.rows):
    print(sylvester_check(M, t).summary())

# the bordered minors are exactly what fraction-free elimination produces
det, trace = det_bareiss(M)
print("Bareiss stage 1:", trace.steps[1][1].to_int_rows(), "pivots", [str(p) for p in trace.pivots])
print("matrix of a^(1):", bordered_minor_matrix(M, 1).to_int_rows())

# 2x2 block rule on a larger matrix
N = ExactMatrix([[2, -1, 0, 3], [1, 4, -2, 0], [0, 5, 1, -1], [3, 0, 2, 2]])
print(block_rule_check(N).summary())
