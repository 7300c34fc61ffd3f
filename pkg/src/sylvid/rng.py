"""
Portable seeded integer generator.

Trial ``k`` of a campaign with master seed ``s`` starts from the state
``s + k * 0x9E3779B97F4A7C15 (mod 2**64)`` and advances with xorshift*
(shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D). Each 64-bit output
is mapped to ``[lo, hi]`` by multiply-shift on its high bits, so the same
arguments give the same matrices in any language with 64-bit integers.
"""

from __future__ import annotations

from .matrix import ExactMatrix

__all__ = ["GOLDEN", "MULTIPLIER", "XorShiftStar", "trial_rng", "random_int_matrix"]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MULTIPLIER = 0x2545F4914F6CDD1D


class XorShiftStar:
    __slots__ = ("state",)

    def __init__(self, state: int):
        state &= MASK64
        # the all-zero state is a fixed point of the xorshift recurrence
        self.state = state or GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * MULTIPLIER) & MASK64

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` from the high bits of one draw."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        return lo + ((self.next_u64() * span) >> 64)

    def sample(self, population, k: int) -> list:
        """``k`` distinct items, by a partial Fisher-Yates shuffle."""
        pool = list(population)
        if not 0 <= k <= len(pool):
            raise ValueError(f"cannot draw {k} items from {len(pool)}")
        for i in range(k):
            j = self.randint(i, len(pool) - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def trial_rng(master: int, trial: int) -> XorShiftStar:
    return XorShiftStar((master + trial * GOLDEN) & MASK64)


def random_int_matrix(rng: XorShiftStar, rows: int, cols: int, lo: int, hi: int) -> ExactMatrix:
    """Entries drawn row-major from ``rng``."""
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols=cols)
