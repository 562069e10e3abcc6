"""Densities along averaging sequences and their finite-stage limit verdicts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .multiplicative import PN_CAP, generate_pn, multiplicative_density
from .sets import IntegerSet, parse_set

CONVERGED = "converged"
OSCILLATING = "oscillating"
UNDECIDED = "undecided"

DEFAULT_WINDOW = 5
DEFAULT_THRESHOLD = Fraction(1, 10**6)
DEFAULT_SCHEDULE = [2**i for i in range(4, 41)]

Z_INTERVALS = "Z_intervals"
N_INTERVALS = "N_intervals"
PROGRESSION = "progression"
P_N = "P_n"


@dataclass(frozen=True)
class AveragingSequence:
    """Increasing finite sets F_n.

    * ``Z_intervals``: ``{-n..n}``
    * ``N_intervals``: ``{base..n}``; ``normalize="length"`` divides by
      ``n - base`` instead of the point count ``n - base + 1``
    * ``progression``: ``{start, start+step, ..., start+(n-1)*step}``
    * ``P_n``: integers over the first n primes with exponents at most n
    """

    kind: str
    base: int = 1
    start: int = 0
    step: int = 1
    normalize: str = "size"

    @classmethod
    def z_intervals(cls):
        return cls(Z_INTERVALS)

    @classmethod
    def n_intervals(cls, base=1, normalize="size"):
        if normalize not in ("size", "length"):
            raise ValueError("normalize must be 'size' or 'length'")
        return cls(N_INTERVALS, base=base, normalize=normalize)

    @classmethod
    def progression(cls, start, step):
        if step == 0:
            raise ValueError("step must be non-zero")
        return cls(PROGRESSION, start=start, step=step)

    @classmethod
    def multiplicative(cls):
        return cls(P_N)

    @property
    def name(self):
        if self.kind == N_INTERVALS:
            return f"N_intervals(base={self.base}{', length' if self.normalize == 'length' else ''})"
        if self.kind == PROGRESSION:
            return f"progression(start={self.start}, step={self.step})"
        return self.kind

    def first_index(self):
        if self.kind == N_INTERVALS:
            return self.base + (1 if self.normalize == "length" else 0)
        return 0 if self.kind in (Z_INTERVALS, P_N) else 1

    def ap(self, n):
        """F_n as an arithmetic progression ``(start, step, length)``."""
        if n < self.first_index():
            raise ValueError(f"index {n} precedes the first set of {self.name}")
        if self.kind == Z_INTERVALS:
            return -n, 1, 2 * n + 1
        if self.kind == N_INTERVALS:
            return self.base, 1, n - self.base + 1
        if self.kind == PROGRESSION:
            return self.start, self.step, n
        raise ValueError("P_n is not a progression")

    def size(self, n):
        if self.kind == P_N:
            return (n + 1) ** n
        return self.ap(n)[2]

    def normalizer(self, n):
        if self.kind == N_INTERVALS and self.normalize == "length":
            return n - self.base
        return self.size(n)

    def elements(self, n):
        if self.kind == P_N:
            return generate_pn(n)
        start, step, length = self.ap(n)
        return range(start, start + step * length, step)

    def default_schedule(self):
        if self.kind == P_N:
            return list(range(1, PN_CAP + 1))
        lo = self.first_index()
        return [n for n in DEFAULT_SCHEDULE if n >= lo]


def parse_sequence(spec: str) -> AveragingSequence:
    """``z``, ``n[:base[:length]]``, ``progression:<start>:<step>``, ``evens+``, ``evens-``, ``pn``."""
    spec = spec.strip()
    if spec in ("z", Z_INTERVALS):
        return AveragingSequence.z_intervals()
    if spec in ("pn", P_N):
        return AveragingSequence.multiplicative()
    if spec == "evens+":
        return AveragingSequence.progression(2, 2)
    if spec == "evens-":
        return AveragingSequence.progression(-2, -2)
    parts = spec.split(":")
    if parts[0] in ("n", N_INTERVALS):
        base = int(parts[1]) if len(parts) > 1 else 1
        norm = parts[2] if len(parts) > 2 else "size"
        return AveragingSequence.n_intervals(base, norm)
    if parts[0] == "progression" and len(parts) == 3:
        return AveragingSequence.progression(int(parts[1]), int(parts[2]))
    raise ValueError(f"unrecognized averaging sequence {spec!r}")


def _as_set(A):
    return parse_set(A) if isinstance(A, str) else A


def density_along(seq: AveragingSequence, A, n) -> Fraction:
    """Exact ``|A & F_n| / |F_n|`` (with the sequence's normalizer)."""
    A = _as_set(A)
    if seq.kind == P_N:
        return multiplicative_density(A, n)
    start, step, length = seq.ap(n)
    if isinstance(A, IntegerSet):
        count = A.count_ap(start, step, length)
    else:
        count = sum(1 for x in range(start, start + step * length, step) if A(x))
    return Fraction(count, seq.normalizer(n))


# -- limit verdicts ---------------------------------------------------------

def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in ``[lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _direction_changes(values):
    signs = []
    for a, b in zip(values, values[1:]):
        if b != a:
            s = 1 if b > a else -1
            if not signs or signs[-1] != s:
                signs.append(s)
    return max(len(signs) - 1, 0)


@dataclass
class Verdict:
    verdict: str
    value: Fraction | None
    low: Fraction
    high: Fraction
    spread: Fraction


def judge(values, window=DEFAULT_WINDOW, threshold=DEFAULT_THRESHOLD) -> Verdict:
    """Finite surrogate for a limit.

    Converged when the last ``window`` values have spread 0 (value exact), or
    spread below ``threshold``; the value is then the simplest rational within
    one spread of the window.  Otherwise oscillating when the sample sequence
    turns at least twice (envelope over its trailing half), else undecided.
    """
    if not values:
        raise ValueError("no samples")
    tail = values[-window:]
    low, high = min(tail), max(tail)
    spread = high - low
    if len(tail) == window:
        if spread == 0:
            return Verdict(CONVERGED, tail[-1], low, high, spread)
        if spread < threshold:
            return Verdict(CONVERGED, simplest_between(low - spread, high + spread), low, high, spread)
    if _direction_changes(values) >= 2:
        half = values[len(values) // 2:]
        return Verdict(OSCILLATING, None, min(half), max(half), max(half) - min(half))
    return Verdict(UNDECIDED, None, low, high, spread)


@dataclass
class DensityReport:
    sequence: str
    set: str
    samples: list = field(default_factory=list)       # (n, ratio)
    window: int = DEFAULT_WINDOW
    threshold: Fraction = DEFAULT_THRESHOLD
    verdict: str = UNDECIDED
    value: Fraction | None = None
    low: Fraction | None = None
    high: Fraction | None = None
    spread: Fraction | None = None

    def to_dict(self):
        return {
            "sequence": self.sequence,
            "set": self.set,
            "samples": [{"n": n, "ratio": r} for n, r in self.samples],
            "window": self.window,
            "threshold": self.threshold,
            "verdict": self.verdict,
            "value": self.value,
            "low": self.low,
            "high": self.high,
        }


def limit_density(seq: AveragingSequence, A, schedule=None, window=DEFAULT_WINDOW,
                  threshold=DEFAULT_THRESHOLD) -> DensityReport:
    A = _as_set(A)
    schedule = list(schedule) if schedule is not None else seq.default_schedule()
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    samples = [(n, density_along(seq, A, n)) for n in schedule]
    v = judge([r for _, r in samples], window, threshold)
    return DensityReport(seq.name, repr(A), samples, window, threshold,
                         v.verdict, v.value, v.low, v.high, v.spread)
