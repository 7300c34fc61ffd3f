"""
Index lists, signed permutations, and pair classes with the arrow update.

Ordered index lists are plain increasing tuples of positive ints. A pair
class is a collection of ``(row, col)`` pairs with distinct rows whose
identity ignores pair order; the listed order is kept because it fixes the
sign of the associated determinant.

>>> list_intersection((1, 3, 4), (1, 4, 5))
(1, 4)
>>> list_complement((1, 3, 5, 6), 6)
(2, 4)
>>> pairclass_arrow(PairClass([(2, 1), (3, 3), (1, 5), (5, 3)]),
...                 PairClass([(1, 1), (2, 3), (4, 4)]))
PairClass([(2, 3), (3, 3), (1, 1), (5, 3), (4, 4)])
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundsError, CapacityError, ConfigurationError, ShapeError

__all__ = [
    "PERMUTATION_CAP",
    "IndexList",
    "ordered",
    "is_ordered",
    "list_union",
    "list_intersection",
    "list_difference",
    "list_complement",
    "inversions",
    "PermutationWithSign",
    "enumerate_permutations",
    "PairClass",
    "pairclass_arrow",
    "parse_index_list",
    "format_index_list",
    "parse_index_lists",
    "parse_pair_class",
    "format_pair_class",
]

PERMUTATION_CAP = 8

IndexList = tuple[int, ...]


def ordered(items: Iterable[int]) -> IndexList:
    """Validate and return an ordered index list (strictly increasing, positive)."""
    out = tuple(int(x) for x in items)
    if any(x < 1 for x in out):
        raise ShapeError(f"index lists hold positive integers, got {out}")
    if not is_ordered(out):
        raise ShapeError(f"{out} is not an ordered index list")
    return out


def is_ordered(items: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(items, items[1:]))


def _within(universe: int | None, *lists: Sequence[int]):
    if universe is None:
        return
    for L in lists:
        for x in L:
            if not 1 <= x <= universe:
                raise BoundsError(f"index {x} outside 1..{universe}", index=x)


def list_union(A: Sequence[int], B: Sequence[int], universe: int | None = None) -> IndexList:
    _within(universe, A, B)
    return tuple(sorted(set(A) | set(B)))


def list_intersection(A: Sequence[int], B: Sequence[int], universe: int | None = None) -> IndexList:
    _within(universe, A, B)
    bs = set(B)
    return tuple(sorted(x for x in set(A) if x in bs))


def list_difference(A: Sequence[int], B: Sequence[int], universe: int | None = None) -> IndexList:
    _within(universe, A, B)
    bs = set(B)
    return tuple(sorted(x for x in set(A) if x not in bs))


def list_complement(A: Sequence[int], universe: int) -> IndexList:
    """``N_universe \\ A``."""
    _within(universe, A)
    return list_difference(range(1, universe + 1), A)


def inversions(seq: Sequence[int]) -> int:
    """Number of pairs ``a < b`` with ``seq[a] > seq[b]``."""
    return sum(1 for a, b in itertools.combinations(range(len(seq)), 2) if seq[a] > seq[b])


@dataclass(frozen=True)
class PermutationWithSign:
    arrangement: tuple[int, ...]
    inversions: int

    @property
    def sign(self) -> int:
        return -1 if self.inversions & 1 else 1


def enumerate_permutations(base: Sequence[int], cap: int = PERMUTATION_CAP) -> list[PermutationWithSign]:
    """All ``k!`` arrangements of ``base`` in lexicographic order, with inversion counts.

    Inversions are counted relative to the sorted base.
    """
    if len(set(base)) != len(base):
        raise ShapeError(f"base {tuple(base)} repeats an element")
    if len(base) > cap:
        raise CapacityError(f"{len(base)}! permutations exceeds the cap of {cap}! ")
    return [
        PermutationWithSign(p, inversions(p))
        for p in itertools.permutations(sorted(base))
    ]


class PairClass:
    """Equivalence class of ``(row, col)`` pairs with pairwise distinct rows.

    ``pairs`` keeps the listed order (it fixes determinant signs);
    ``canonical`` sorts by row and is what equality compares.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[Sequence[int]] = ()):
        ps = tuple((int(i), int(j)) for i, j in pairs)
        rows = [i for i, _ in ps]
        if len(set(rows)) != len(rows):
            raise ConfigurationError(f"pair class repeats a row index: {ps}")
        self.pairs = ps

    @classmethod
    def diagonal(cls, t: int) -> "PairClass":
        """``[(1,1), ..., (t,t)]``."""
        return cls((k, k) for k in range(1, t + 1))

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    @property
    def cols(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.pairs)

    @property
    def canonical(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, PairClass):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"PairClass({list(self.pairs)})"

    def __str__(self):
        return format_pair_class(self)


def pairclass_arrow(base: PairClass, update: PairClass) -> PairClass:
    """The ``base <- update`` operation.

    Each update pair ``(u, v)`` replaces the pair of ``base`` whose row is
    ``u`` (in place), or is appended when no such row exists.
    """
    out = list(base.pairs)
    where = {i: pos for pos, (i, _) in enumerate(out)}
    for u, v in update.pairs:
        if u in where:
            out[where[u]] = (u, v)
        else:
            where[u] = len(out)
            out.append((u, v))
    return PairClass(out)


# -- text forms --------------------------------------------------------------

_LIST = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*,?\s*\)")
_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_index_list(text: str) -> tuple[int, ...]:
    """``"(1,3,4)"`` -> ``(1, 3, 4)``; bare ``"1,3,4"`` is accepted too."""
    s = text.strip()
    if not s.startswith("("):
        s = f"({s})"
    m = _LIST.fullmatch(s)
    if not m:
        raise ValueError(f"bad index list {text!r}")
    body = m.group(1)
    return tuple(int(x) for x in body.split(",")) if body else ()


def format_index_list(items: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in items) + ")"


def parse_index_lists(text: str) -> list[tuple[int, ...]]:
    """Several lists, e.g. ``"(1,3,4),(1,4,5);(2,4,5)"``."""
    found = re.findall(r"\([^()]*\)", text)
    leftover = re.sub(r"\([^()]*\)", "", text)
    if not found or leftover.strip(" ,;"):
        raise ValueError(f"bad list of index lists {text!r}")
    return [parse_index_list(f) for f in found]


def parse_pair_class(text: str) -> PairClass:
    """``"[(1,1),(2,3)]"`` -> PairClass."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad pair class {text!r}")
    inner = s[1:-1]
    pairs = _PAIR.findall(inner)
    if _PAIR.sub("", inner).strip(" ,"):
        raise ValueError(f"bad pair class {text!r}")
    return PairClass((int(i), int(j)) for i, j in pairs)


def format_pair_class(pc: PairClass) -> str:
    return "[" + ",".join(f"({i},{j})" for i, j in pc.pairs) + "]"
