from fractions import Fraction

import pytest
from hypothesis import given

from sylvid.errors import BoundsError, MatrixFormatError, ShapeError
from sylvid.matrix import (
    ExactMatrix,
    as_scalar,
    format_matrix,
    parse_matrix,
    parse_scalar,
    read_matrix,
    submatrix,
    write_matrix,
)

from conftest import int_matrices


def test_identity_selection():
    assert submatrix(ExactMatrix.identity(3), (1, 3), (1, 3)) == ExactMatrix([[1, 0], [0, 1]])


def test_listed_order_extraction():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert submatrix(M, (2, 1), (1, 2)) == ExactMatrix([[3, 4], [1, 2]])


def test_direct_selection(m3):
    assert submatrix(m3, (1, 2), (2, 3)) == ExactMatrix([[2, 3], [5, 6]])


def test_out_of_bounds_reports_index(m3):
    with pytest.raises(BoundsError) as exc:
        submatrix(m3, (1, 4), (1, 2))
    assert exc.value.index == 4
    with pytest.raises(BoundsError):
        m3[0, 1]


def test_ragged_rows_rejected():
    with pytest.raises(ShapeError):
        ExactMatrix([[1, 2], [3]])


def test_scalars_are_exact():
    assert as_scalar(3) == Fraction(3)
    assert as_scalar("2/4") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)
    assert parse_scalar("-7/3") == Fraction(-7, 3)
    with pytest.raises(MatrixFormatError):
        parse_scalar("1/0")
    with pytest.raises(MatrixFormatError):
        parse_scalar("1.5")


def test_matrix_text_format():
    text = "2 3\n1 -2 3/4\n0 5 6\n"
    M = parse_matrix(text)
    assert M.shape == (2, 3)
    assert M[1, 3] == Fraction(3, 4)
    assert format_matrix(M) == text


@pytest.mark.parametrize(
    "text",
    ["", "2\n1 2\n", "0 2\n", "2 2\n1 2\n3\n", "2 2\n1 2\n3 4 5\n", "1 1\nx\n", "1 1\n1\n2\n"],
)
def test_malformed_matrix_text(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_file_round_trip(tmp_path):
    M = ExactMatrix([[1, Fraction(-1, 2)], [3, 4]])
    path = tmp_path / "m.txt"
    write_matrix(M, path)
    assert path.read_bytes() == b"2 2\n1 -1/2\n3 4\n"
    assert read_matrix(path) == M


@given(int_matrices(square=False))
def test_text_round_trip(M):
    assert parse_matrix(format_matrix(M)) == M


@given(int_matrices(square=False))
def test_transpose_involution(M):
    T = M.transpose()
    assert T.shape == (M.cols, M.rows)
    assert T.transpose() == M
    assert all(T[j, i] == M[i, j] for i in range(1, M.rows + 1) for j in range(1, M.cols + 1))
