"""Integer sets that can be counted exactly on arithmetic progressions.

Every set answers ``count_ap(start, step, length)``, the number of
``i in [0, length)`` with ``start + step*i`` in the set.  Sets with a closed
form (intervals, residue classes, the doubly exponential blocks of
``wset``) count in time independent of ``length``; the rest fall back to
enumeration and refuse above ``cap``.
"""

from __future__ import annotations

import bisect
import re
from math import gcd

DEFAULT_CAP = 10**7


class PredicateNotCountable(ValueError):
    pass


class SetSpecError(ValueError):
    pass


def _floor_div(a, b):
    return a // b


def _ceil_div(a, b):
    return -((-a) // b)


def _normalize_ap(start, step, length):
    if step == 0:
        raise ValueError("progression step must be non-zero")
    if step < 0:
        return start + step * (length - 1), -step, length
    return start, step, length


class IntegerSet:
    cap = DEFAULT_CAP

    def __contains__(self, x) -> bool:
        raise NotImplementedError

    def count_ap(self, start, step, length) -> int:
        if length <= 0:
            return 0
        if length > self.cap:
            raise PredicateNotCountable(f"{self!r} has no closed-form count and {length} points exceed cap {self.cap}")
        return sum(1 for i in range(length) if start + step * i in self)

    def count(self, lo, hi) -> int:
        """Members in the closed interval [lo, hi]."""
        return self.count_ap(lo, 1, hi - lo + 1) if hi >= lo else 0

    def shifted(self, t):
        return Shifted(self, t)


class ArithmeticSet(IntegerSet):
    """``{x : lo <= x <= hi, x = residue (mod modulus)}``; ``None`` bounds are infinite."""

    def __init__(self, modulus=1, residue=0, lo=None, hi=None):
        if modulus < 1:
            raise SetSpecError("modulus must be positive")
        self.modulus = modulus
        self.residue = residue % modulus
        self.lo = lo
        self.hi = hi

    def __contains__(self, x):
        if self.lo is not None and x < self.lo:
            return False
        if self.hi is not None and x > self.hi:
            return False
        return x % self.modulus == self.residue

    def __repr__(self):
        return f"ArithmeticSet(modulus={self.modulus}, residue={self.residue}, lo={self.lo}, hi={self.hi})"

    def count_ap(self, start, step, length):
        if length <= 0:
            return 0
        start, step, length = _normalize_ap(start, step, length)
        i_lo, i_hi = 0, length - 1
        if self.lo is not None:
            i_lo = max(i_lo, _ceil_div(self.lo - start, step))
        if self.hi is not None:
            i_hi = min(i_hi, _floor_div(self.hi - start, step))
        if i_hi < i_lo:
            return 0
        k = self.modulus
        if k == 1:
            return i_hi - i_lo + 1
        # step*i = residue - start (mod k)
        g = gcd(step, k)
        rhs = (self.residue - start) % k
        if rhs % g:
            return 0
        kk = k // g
        i0 = (rhs // g) * pow(step // g, -1, kk) % kk if kk > 1 else 0
        return _floor_div(i_hi - i0, kk) - _floor_div(i_lo - 1 - i0, kk)


def interval(lo, hi):
    return ArithmeticSet(1, 0, lo, hi)


def residue_class(k, r):
    return ArithmeticSet(k, r)


class IntervalSet(IntegerSet):
    """Finite union of closed integer intervals, kept sorted and merged."""

    def __init__(self, intervals=()):
        merged = []
        for a, b in sorted((int(a), int(b)) for a, b in intervals):
            if b < a:
                raise SetSpecError(f"empty interval [{a}, {b}]")
            if merged and a <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        self.intervals = [tuple(iv) for iv in merged]
        self._starts = [a for a, _ in self.intervals]

    def __contains__(self, x):
        i = bisect.bisect_right(self._starts, x) - 1
        return i >= 0 and x <= self.intervals[i][1]

    def __repr__(self):
        return f"IntervalSet({self.intervals})"

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __or__(self, other):
        return IntervalSet(self.intervals + other.intervals)

    def __len__(self):
        return sum(b - a + 1 for a, b in self.intervals)

    def isdisjoint(self, other):
        return len(self | other) == len(self) + len(other)

    def count_ap(self, start, step, length):
        return sum(interval(a, b).count_ap(start, step, length) for a, b in self.intervals)


class WSet(IntegerSet):
    """``{n >= 2 : floor(log2 log2 n) is even}``, the union of the blocks
    ``[2**2**(2k), 2**2**(2k+1) - 1]`` for k = 0, 1, 2, ..."""

    def __contains__(self, x):
        if x < 2:
            return False
        e = x.bit_length() - 1          # floor(log2 x) >= 1
        return (e.bit_length() - 1) % 2 == 0

    def __repr__(self):
        return "WSet()"

    @staticmethod
    def blocks(upto):
        k = 0
        while True:
            a = 1 << (1 << (2 * k))
            if a > upto:
                return
            yield a, (1 << (1 << (2 * k + 1))) - 1
            k += 1

    def count_ap(self, start, step, length):
        if length <= 0:
            return 0
        start, step, length = _normalize_ap(start, step, length)
        top = start + step * (length - 1)
        return sum(interval(a, b).count_ap(start, step, length) for a, b in self.blocks(top))


class FiniteSet(IntegerSet):
    def __init__(self, elements):
        self.elements = frozenset(int(x) for x in elements)

    def __contains__(self, x):
        return x in self.elements

    def __repr__(self):
        return f"FiniteSet({sorted(self.elements)})"

    def count_ap(self, start, step, length):
        if length <= 0:
            return 0
        start, step, length = _normalize_ap(start, step, length)
        return sum(1 for x in self.elements
                   if start <= x <= start + step * (length - 1) and (x - start) % step == 0)


class Everything(IntegerSet):
    def __contains__(self, x):
        return True

    def __repr__(self):
        return "Everything()"

    def count_ap(self, start, step, length):
        return max(length, 0)


class Shifted(IntegerSet):
    """``A + t``."""

    def __init__(self, base, t):
        self.base, self.t = base, t

    def __contains__(self, x):
        return (x - self.t) in self.base

    def __repr__(self):
        return f"Shifted({self.base!r}, {self.t})"

    def count_ap(self, start, step, length):
        return self.base.count_ap(start - self.t, step, length)


class Union(IntegerSet):
    """Union of sets the caller guarantees to be pairwise disjoint; counts add."""

    def __init__(self, parts):
        self.parts = list(parts)

    def __contains__(self, x):
        return any(x in p for p in self.parts)

    def __repr__(self):
        return f"Union({self.parts})"

    def count_ap(self, start, step, length):
        return sum(p.count_ap(start, step, length) for p in self.parts)


class PredicateSet(IntegerSet):
    def __init__(self, predicate, name="predicate", cap=DEFAULT_CAP):
        self.predicate, self.name, self.cap = predicate, name, cap

    def __contains__(self, x):
        return bool(self.predicate(x))

    def __repr__(self):
        return f"PredicateSet({self.name})"


def leading_digit(x: int) -> int:
    return int(str(abs(x))[0])


class LeadingDigits(PredicateSet):
    """Positive integers whose first decimal digit lies in ``digits``."""

    def __init__(self, digits, cap=DEFAULT_CAP):
        self.digits = frozenset(int(d) for d in digits)
        if not self.digits <= set(range(1, 10)):
            raise SetSpecError("leading digits must lie in 1..9")
        super().__init__(lambda x: x > 0 and leading_digit(x) in self.digits,
                         f"benford:{''.join(map(str, sorted(self.digits)))}", cap)


def parse_set(spec: str) -> IntegerSet:
    """Mini-language: ``residue:<k>:<r>``, ``intervals:[a,b];[c,d]``, ``wset``,
    ``evens``, ``odds``, ``all``, ``benford:<digits>``, ``finite:{x1,...}``."""
    spec = spec.strip()
    if spec == "wset":
        return WSet()
    if spec == "evens":
        return residue_class(2, 0)
    if spec == "odds":
        return residue_class(2, 1)
    if spec == "all":
        return Everything()
    m = re.fullmatch(r"residue:(\d+):(-?\d+)", spec)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise SetSpecError("modulus must be positive")
        return residue_class(k, int(m.group(2)))
    if spec.startswith("intervals:"):
        pairs = re.findall(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]", spec)
        if not pairs:
            raise SetSpecError(f"no intervals in {spec!r}")
        return IntervalSet((int(a), int(b)) for a, b in pairs)
    m = re.fullmatch(r"benford:(\d*)", spec)
    if m:
        return LeadingDigits(int(d) for d in m.group(1))
    m = re.fullmatch(r"finite:\{?([-\d,\s]*)\}?", spec)
    if m:
        body = [v for v in m.group(1).split(",") if v.strip()]
        return FiniteSet(int(v) for v in body)
    raise SetSpecError(f"unrecognized set description {spec!r}")

