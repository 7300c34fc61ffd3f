from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylvid.determinants import det_bareiss, det_reference, extended_minor, leading_minor, minor_det
from sylvid.errors import CapacityError, DomainError, PivotError, ShapeError
from sylvid.matrix import ExactMatrix

from conftest import int_matrices, leibniz_det, seeded


def test_known_determinants(m3):
    assert det_reference(ExactMatrix.identity(4)) == 1
    assert det_reference(ExactMatrix([[1, 2], [3, 4]])) == -2
    assert det_reference(m3) == -3 == leibniz_det(m3.to_lists())


def test_reference_limits():
    with pytest.raises(ShapeError):
        det_reference(ExactMatrix([[1, 2, 3]]))
    with pytest.raises(CapacityError):
        det_reference(ExactMatrix.identity(11))
    assert det_reference(ExactMatrix.identity(11), cap=11) == 1


def test_minor_det(m3):
    assert minor_det(m3, (), ()) == 1
    assert minor_det(ExactMatrix([[1, 2], [3, 4]]), (1, 2), (1, 2)) == -2
    assert minor_det(m3, (1, 2, 3), (1, 2, 3)) == -3
    # listed order matters: swapping two rows flips the sign
    assert minor_det(m3, (2, 1), (1, 2)) == 3
    with pytest.raises(ShapeError):
        minor_det(m3, (1, 2), (1,))


def test_extended_minor(m3):
    assert extended_minor(ExactMatrix([[1, 2], [3, 4]]), 1, 2, 2) == -2
    values = [extended_minor(m3, 1, i, j) for i in (2, 3) for j in (2, 3)]
    assert values == [-3, -6, -6, -11]
    with pytest.raises(DomainError):
        extended_minor(m3, 1, 1, 2)
    with pytest.raises(DomainError):
        extended_minor(m3, 3, 3, 3)


def test_rational_entries():
    M = ExactMatrix([[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(2, 5)]])
    expected = Fraction(1, 2) * Fraction(2, 5) - Fraction(1, 3)
    assert det_reference(M) == expected
    assert det_bareiss(M)[0] == expected


def test_bareiss_identity():
    det, trace = det_bareiss(ExactMatrix.identity(4))
    assert det == 1
    assert trace.pivots == (1, 1, 1, 1)
    assert trace.all_exact


def test_bareiss_fixture(m3):
    det, trace = det_bareiss(m3)
    assert det == -3
    assert trace.pivots[-1] == -3
    stage1 = trace.steps[1][1]
    assert [stage1[i, j] for i in (2, 3) for j in (2, 3)] == [-3, -6, -6, -11]


def test_bareiss_zero_pivot():
    with pytest.raises(PivotError) as exc:
        det_bareiss(ExactMatrix([[0, 1], [1, 0]]))
    assert exc.value.order == 1
    M = ExactMatrix([[1, 2, 0], [2, 4, 1], [0, 1, 1]])
    with pytest.raises(PivotError) as exc:
        det_bareiss(M)
    assert exc.value.order == 2


def test_leading_minor(m3):
    assert leading_minor(m3, 0) == 1
    assert leading_minor(m3, 1) == 1
    assert leading_minor(m3, 2) == -3
    assert leading_minor(m3, 3) == -3


@pytest.mark.parametrize("n", range(1, 7))
def test_reference_matches_leibniz(n):
    for k in range(30):
        M = seeded(n, k, n)
        assert det_reference(M) == leibniz_det(M.to_lists())


def test_bareiss_matches_reference_1000_seeded():
    checked = 0
    for k in range(1000):
        n = 1 + k % 7
        M = seeded(2024, k, n)
        try:
            det, _ = det_bareiss(M)
        except PivotError as exc:
            assert leading_minor(M, exc.order) == 0
            continue
        assert det == det_reference(M)
        checked += 1
    assert checked > 900


@given(int_matrices(max_n=5), st.integers(-5, 5), st.data())
def test_multilinear_in_each_row(M, k, data):
    i = data.draw(st.integers(1, M.rows))
    assert det_reference(M.scale_row(i, k)) == k * det_reference(M)


@given(int_matrices(max_n=5), st.data())
def test_alternating_under_row_swap(M, data):
    if M.rows < 2:
        return
    a, b = data.draw(st.lists(st.integers(1, M.rows), min_size=2, max_size=2, unique=True))
    order = list(range(1, M.rows + 1))
    order[a - 1], order[b - 1] = order[b - 1], order[a - 1]
    assert det_reference(M.permuted(order, range(1, M.cols + 1))) == -det_reference(M)


@given(int_matrices(max_n=5))
def test_transpose_invariance(M):
    assert det_reference(M.transpose()) == det_reference(M)


@settings(max_examples=50)
@given(int_matrices(max_n=4), int_matrices(max_n=4))
def test_product_rule(A, B):
    if A.rows != B.rows:
        return
    n = A.rows
    C = ExactMatrix([[sum(A[i, k] * B[k, j] for k in range(1, n + 1)) for j in range(1, n + 1)] for i in range(1, n + 1)])
    assert det_reference(C) == det_reference(A) * det_reference(B)
