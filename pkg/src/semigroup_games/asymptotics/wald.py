"""Pick-the-bigger-integer on the non-negative integers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..rational import to_fraction


@dataclass(frozen=True)
class FiniteSupportStrategy:
    weights: tuple   # sorted ((point, weight), ...), weights positive, summing to 1

    def __init__(self, weights):
        items = weights.items() if isinstance(weights, dict) else weights
        merged = {}
        for point, w in items:
            point, w = int(point), to_fraction(w)
            if point < 0:
                raise ValueError(f"support point {point} is negative")
            if w <= 0:
                raise ValueError(f"weight at {point} is not positive")
            merged[point] = merged.get(point, 0) + w
        if not merged:
            raise ValueError("empty support")
        if sum(merged.values()) != 1:
            raise ValueError(f"weights sum to {sum(merged.values())}, not 1")
        object.__setattr__(self, "weights", tuple(sorted(merged.items())))

    @classmethod
    def point_mass(cls, point):
        return cls({point: 1})

    @classmethod
    def uniform(cls, points):
        points = list(points)
        return cls({p: Fraction(1, len(points)) for p in points})

    @classmethod
    def parse(cls, spec: str):
        """``"0:1/10,1:1/10,..."``."""
        pairs = []
        for item in spec.split(","):
            if item.strip():
                point, w = item.split(":")
                pairs.append((int(point), Fraction(w.strip())))
        return cls(pairs)

    @property
    def support(self):
        return [p for p, _ in self.weights]

    def expect(self, g) -> Fraction:
        return sum((w * to_fraction(g(p)) for p, w in self.weights), Fraction(0))


def wald_payoff(s: int, t: int) -> int:
    return (s > t) - (s < t)


def wald_expected(p: FiniteSupportStrategy, t: int) -> Fraction:
    """Player 1's expected payoff when they play ``p`` and player 2 plays ``t``."""
    return p.expect(lambda s: wald_payoff(s, t))


def wald_best_response(p: FiniteSupportStrategy):
    """Player 2's best pure reply ``(t, payoff)``; the lowest minimizer on ties.

    The expected payoff is constant between support points, so only 0, the
    support points and their successors need checking; ``max(support) + 1``
    already forces -1.
    """
    candidates = sorted({0, *p.support, *(s + 1 for s in p.support)})
    best = None
    for t in candidates:
        v = wald_expected(p, t)
        if best is None or v < best[1]:
            best = (t, v)
    return best


def random_strategy(rng: random.Random, max_support=8, max_point=50, max_den=20):
    k = rng.randint(1, max_support)
    points = rng.sample(range(max_point + 1), k)
    raw = [rng.randint(1, max_den) for _ in points]
    total = sum(raw)
    return FiniteSupportStrategy({pt: Fraction(r, total) for pt, r in zip(points, raw)})
