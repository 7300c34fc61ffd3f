"""
Exact rational matrices with 1-based minor extraction.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. Matrices are immutable; every
operation returns a new matrix.

>>> M = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
>>> M[2, 3]
Fraction(6, 1)
>>> submatrix(M, (1, 2), (2, 3)).to_int_rows()
[[2, 3], [5, 6]]
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BoundsError, MatrixFormatError, ShapeError

__all__ = [
    "ExactMatrix",
    "as_scalar",
    "format_scalar",
    "parse_scalar",
    "submatrix",
    "parse_matrix",
    "format_matrix",
    "read_matrix",
    "write_matrix",
]

_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        raise TypeError("floating-point entries are not exact; pass a Fraction or string")
    # numpy integers and other Rational-likes
    return Fraction(value)


def parse_scalar(token: str) -> Fraction:
    token = token.strip()
    if not _TOKEN.match(token):
        raise MatrixFormatError(f"bad scalar token {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise MatrixFormatError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_scalar(x: Fraction) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    return str(x)


class ExactMatrix:
    """Dense immutable ``rows x cols`` matrix of exact rationals.

    Entries are addressed 1-based, ``M[i, j]``. Construction accepts any
    nested sequence of ints, Fractions or ``"p/q"`` strings.
    """

    __slots__ = ("_rows", "_cols", "_data", "_integral", "_hash")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else (cols or 0)
        if cols is not None and data and cols != ncols:
            raise ShapeError(f"expected {cols} columns, got {ncols}")
        for r, row in enumerate(data, 1):
            if len(row) != ncols:
                raise ShapeError(f"row {r} has {len(row)} entries, expected {ncols}")
        self._rows = len(data)
        self._cols = ncols
        self._data = data
        self._integral = all(x.denominator == 1 for row in data for x in row)
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "ExactMatrix":
        if len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)], cols=cols)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    @property
    def is_integral(self) -> bool:
        """True when every entry has denominator 1."""
        return self._integral

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self._data for x in row)

    def row(self, i: int) -> tuple[Fraction, ...]:
        self._check_row(i)
        return self._data[i - 1]

    def __getitem__(self, key) -> Fraction:
        i, j = key
        self._check_row(i)
        self._check_col(j)
        return self._data[i - 1][j - 1]

    def _check_row(self, i):
        if not 1 <= i <= self._rows:
            raise BoundsError(f"row index {i} outside 1..{self._rows}", index=i)

    def _check_col(self, j):
        if not 1 <= j <= self._cols:
            raise BoundsError(f"column index {j} outside 1..{self._cols}", index=j)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def to_int_rows(self) -> list[list[int]]:
        """Integer entries; only valid for integral matrices."""
        if not self._integral:
            raise ValueError("matrix has non-integer entries")
        return [[x.numerator for x in row] for row in self._data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._data), cols=self._rows) if self._rows else ExactMatrix([], cols=0)

    def scale_row(self, i: int, k) -> "ExactMatrix":
        self._check_row(i)
        k = as_scalar(k)
        return ExactMatrix(
            [[x * k for x in row] if r == i else row for r, row in enumerate(self._data, 1)],
            cols=self._cols,
        )

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "ExactMatrix":
        """Alias of :func:`submatrix`, reads better when both lists are permutations."""
        return submatrix(self, row_order, col_order)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(map(str, row)) + "]" for row in self._data)
        return f"ExactMatrix([{body}])"


def submatrix(M: ExactMatrix, I: Sequence[int], J: Sequence[int]) -> ExactMatrix:
    """Rows ``I`` and columns ``J`` of ``M``, taken in the listed order.

    Lists need not be increasing and may repeat.
    """
    for i in I:
        M._check_row(i)
    for j in J:
        M._check_col(j)
    data = M._data
    return ExactMatrix([[data[i - 1][j - 1] for j in J] for i in I], cols=len(J))


def _integer_rows(M: ExactMatrix) -> tuple[list[list[int]], int]:
    """Integer rows plus the common denominator they were scaled by."""
    if M.is_integral:
        return M.to_int_rows(), 1
    scale = 1
    out = []
    for row in M._data:
        lcm = math.lcm(*(x.denominator for x in row)) if row else 1
        scale *= lcm
        out.append([x.numerator * (lcm // x.denominator) for x in row])
    return out, scale


# -- text format -----------------------------------------------------------


def parse_matrix(text: str) -> ExactMatrix:
    """Parse the ``"R C"`` header plus ``R`` lines of ``C`` tokens."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixFormatError(f"bad header line {lines[0]!r}")
    nrows, ncols = int(header[0]), int(header[1])
    if nrows < 1 or ncols < 1:
        raise MatrixFormatError(f"matrix dimensions must be positive, got {nrows}x{ncols}")
    body = lines[1:]
    if len(body) != nrows:
        raise MatrixFormatError(f"header announces {nrows} rows, found {len(body)}")
    rows = []
    for r, line in enumerate(body, 1):
        tokens = line.split()
        if len(tokens) != ncols:
            raise MatrixFormatError(f"row {r} has {len(tokens)} tokens, expected {ncols}")
        rows.append([parse_scalar(tok) for tok in tokens])
    return ExactMatrix(rows, cols=ncols)


def format_matrix(M: ExactMatrix) -> str:
    lines = [f"{M.rows} {M.cols}"]
    lines += [" ".join(format_scalar(x) for x in row) for row in M._data]
    return "\n".join(lines) + "\n"


def read_matrix(path) -> ExactMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(M: ExactMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(M))
