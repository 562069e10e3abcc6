"""Exact counting for W = {n >= 2 : floor(log2 log2 n) even}, a set of
integers whose density along [2, n] oscillates between 0 and 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_J = 6


def w_count(n: int) -> int:
    """``|W & [2, n]|`` by summing the blocks ``[2**2**(2k), 2**2**(2k+1) - 1]``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 0
    k = 0
    while True:
        a = 1 << (1 << (2 * k))
        if a > n:
            return total
        b = (1 << (1 << (2 * k + 1))) - 1
        total += (n if n < b else b) - a + 1
        k += 1


def w_density_ratio(n: int) -> Fraction:
    """``w_count(n) / (n - 2)``; the normalization counts the interval length."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return Fraction(w_count(n), n - 2)


def low_node(j: int) -> int:
    """Last integer before the block starting at 2**2**(2j)."""
    return (1 << (1 << (2 * j))) - 1


def high_node(j: int) -> int:
    """First integer after the block ending at 2**2**(2j+1) - 1."""
    return 1 << (1 << (2 * j + 1))


@dataclass
class OscillationRow:
    j: int
    low_n: int
    low_ratio: Fraction
    high_n: int
    high_ratio: Fraction
    block_start_bound: Fraction   # start of the previous block over n - 2
    block_end_bound: Fraction     # end of the previous block over n - 2

    @property
    def within_block_start_bound(self) -> bool:
        return self.low_ratio <= self.block_start_bound

    @property
    def within_block_end_bound(self) -> bool:
        return self.low_ratio <= self.block_end_bound

    def to_dict(self):
        return {
            "j": self.j,
            "low_n": self.low_n,
            "low_ratio": self.low_ratio,
            "high_n": self.high_n,
            "high_ratio": self.high_ratio,
            "block_start_bound": self.block_start_bound,
            "within_block_start_bound": self.within_block_start_bound,
            "block_end_bound": self.block_end_bound,
            "within_block_end_bound": self.within_block_end_bound,
        }


def w_oscillation_table(j_max: int) -> list:
    """Ratios at the low nodes ``2**2**(2j) - 1`` and high nodes ``2**2**(2j+1)``.

    ``block_start_bound`` uses ``2**2**(2(j-1))`` as numerator and already fails
    at j = 2 (242 > 16); ``block_end_bound`` uses ``2**2**(2j-1)``, which does
    bound the count.
    """
    if not 1 <= j_max <= MAX_J:
        raise ValueError(f"j_max must lie in 1..{MAX_J}")
    rows = []
    for j in range(1, j_max + 1):
        lo, hi = low_node(j), high_node(j)
        rows.append(OscillationRow(
            j, lo, w_density_ratio(lo), hi, w_density_ratio(hi),
            Fraction(1 << (1 << (2 * (j - 1))), lo - 2),
            Fraction(1 << (1 << (2 * j - 1)), lo - 2),
        ))
    return rows
