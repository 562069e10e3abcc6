"""Iterated integrals of a two-variable integrand against densities or
finite-support strategies, integrated in either order.

For density-type measures each integral is a limit along the averaging
sequence, replaced here by the stabilization verdict of
:func:`~.density.judge`.  An inner integral that never settles makes the
whole result ``undecided``; no value is guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .density import (CONVERGED, DEFAULT_THRESHOLD, DEFAULT_WINDOW, UNDECIDED,
                      AveragingSequence, judge)
from .sets import ArithmeticSet
from .wald import FiniteSupportStrategy, wald_payoff

X_INNER = "x-inner"
Y_INNER = "y-inner"

DEFAULT_INNER_SCHEDULE = [2**i for i in range(4, 65, 4)]
DEFAULT_OUTER_SCHEDULE = [2**i for i in range(2, 11)]
ENUM_CAP = 10**6


class Integrand:
    """Bounded ``f(x, y)``.  Subclasses may describe sections exactly through
    :meth:`section`, which lets inner averages be counted rather than enumerated."""

    name = "integrand"

    def __call__(self, x, y):
        raise NotImplementedError

    def section(self, fixed, free):
        """``[(coefficient, IntegerSet), ...]`` summing to ``f`` as a function of
        the ``free`` variable ("x" or "y") with the other one set to ``fixed``,
        or None when no closed form is known."""
        return None


class FunctionIntegrand(Integrand):
    def __init__(self, func, name="f"):
        self.func, self.name = func, name

    def __call__(self, x, y):
        return self.func(x, y)


class WaldIntegrand(Integrand):
    """``sign(x - y)``."""

    name = "wald"

    def __call__(self, x, y):
        return wald_payoff(x, y)

    def section(self, fixed, free):
        above = ArithmeticSet(lo=fixed + 1)
        below = ArithmeticSet(hi=fixed - 1)
        if free == "x":
            return [(1, above), (-1, below)]
        return [(1, below), (-1, above)]


class ParityIntegrand(Integrand):
    """``+1`` when ``x + y`` is a non-negative even number, ``-1`` when it is a
    positive odd number, ``0`` when it is negative."""

    name = "parity"

    def __call__(self, x, y):
        z = x + y
        if z < 0:
            return 0
        return 1 if z % 2 == 0 else -1

    def section(self, fixed, free):
        # x + fixed >= 0 and of the right parity; symmetric in the two variables
        return [(1, ArithmeticSet(2, -fixed, lo=-fixed)),
                (-1, ArithmeticSet(2, 1 - fixed, lo=-fixed))]


@dataclass
class IntegralEvidence:
    verdict: str
    value: Fraction | None
    samples: list = field(default_factory=list)    # (n, value) along the schedule
    spread: Fraction | None = None


@dataclass
class IteratedIntegralReport:
    order: str
    integrand: str
    inner_measure: str
    outer_measure: str
    verdict: str
    value: Fraction | None
    outer: IntegralEvidence | None = None
    inner_points: int = 0
    inner_converged: int = 0
    inner_max_spread: Fraction | None = None
    inner_examples: dict = field(default_factory=dict)
    exact: bool = False

    def to_dict(self):
        return {
            "order": self.order,
            "integrand": self.integrand,
            "inner_measure": self.inner_measure,
            "outer_measure": self.outer_measure,
            "verdict": self.verdict,
            "value": self.value,
            "exact": self.exact,
            "outer": None if self.outer is None else {
                "verdict": self.outer.verdict,
                "spread": self.outer.spread,
                "samples": [{"n": n, "value": v} for n, v in self.outer.samples],
            },
            "inner": {
                "points": self.inner_points,
                "converged": self.inner_converged,
                "max_spread": self.inner_max_spread,
                "examples": {str(k): v for k, v in self.inner_examples.items()},
            },
        }


def _measure_name(mu):
    if isinstance(mu, FiniteSupportStrategy):
        return "finite:" + ",".join(f"{p}:{w}" for p, w in mu.weights)
    return mu.name


def _call(f, free, z, fixed):
    return f(z, fixed) if free == "x" else f(fixed, z)


def _average(f, free, fixed, seq: AveragingSequence, n):
    start, step, length = seq.ap(n)
    sec = f.section(fixed, free)
    if sec is not None:
        total = sum(Fraction(c) * A.count_ap(start, step, length) for c, A in sec)
    else:
        if length > ENUM_CAP:
            raise OverflowError(f"{length} points exceed the enumeration cap {ENUM_CAP}")
        total = sum(Fraction(_call(f, free, start + step * i, fixed)) for i in range(length))
    return total / seq.normalizer(n)


def _integrate(g, mu, schedule, window, threshold) -> IntegralEvidence:
    """Integrate the one-variable function ``g`` (returning exact values or None
    for undecided) against ``mu``."""
    if isinstance(mu, FiniteSupportStrategy):
        total = Fraction(0)
        for p, w in mu.weights:
            v = g(p)
            if v is None:
                return IntegralEvidence(UNDECIDED, None)
            total += w * v
        return IntegralEvidence(CONVERGED, total, spread=Fraction(0))
    schedule = [n for n in schedule if n >= mu.first_index()]
    samples = []
    cache = {}
    for n in schedule:
        total = Fraction(0)
        for z in mu.elements(n):
            if z not in cache:
                cache[z] = g(z)
            if cache[z] is None:
                return IntegralEvidence(UNDECIDED, None, samples)
            total += cache[z]
        samples.append((n, total / mu.normalizer(n)))
    v = judge([s for _, s in samples], window, threshold)
    return IntegralEvidence(v.verdict, v.value if v.verdict == CONVERGED else None, samples, v.spread)


def iterated_asymptotic_integral(f: Integrand, mu, nu, order=X_INNER, inner_schedule=None,
                                 outer_schedule=None, window=DEFAULT_WINDOW,
                                 threshold=DEFAULT_THRESHOLD) -> IteratedIntegralReport:
    """``x-inner``: integrate over x (measure ``mu``, player 1) first, then over y
    (measure ``nu``).  ``y-inner``: the other way round."""
    if not isinstance(f, Integrand):
        f = FunctionIntegrand(f)
    if order == X_INNER:
        inner, outer, free = mu, nu, "x"
    elif order == Y_INNER:
        inner, outer, free = nu, mu, "y"
    else:
        raise ValueError("order must be 'x-inner' or 'y-inner'")
    inner_schedule = inner_schedule or DEFAULT_INNER_SCHEDULE
    outer_schedule = outer_schedule or DEFAULT_OUTER_SCHEDULE

    stats = {"points": 0, "converged": 0, "max_spread": Fraction(0), "examples": {}}

    def inner_integral(fixed):
        if isinstance(inner, FiniteSupportStrategy):
            ev = IntegralEvidence(CONVERGED, sum((w * Fraction(_call(f, free, z, fixed))
                                                  for z, w in inner.weights), Fraction(0)), spread=Fraction(0))
        else:
            sched = [n for n in inner_schedule if n >= inner.first_index()]
            vals = [(n, _average(f, free, fixed, inner, n)) for n in sched]
            v = judge([s for _, s in vals], window, threshold)
            ev = IntegralEvidence(v.verdict, v.value if v.verdict == CONVERGED else None, vals, v.spread)
        stats["points"] += 1
        if ev.verdict == CONVERGED:
            stats["converged"] += 1
            stats["max_spread"] = max(stats["max_spread"], ev.spread)
        if len(stats["examples"]) < 3:
            stats["examples"][fixed] = {"verdict": ev.verdict, "value": ev.value, "spread": ev.spread}
        return ev.value

    outer_ev = _integrate(inner_integral, outer, outer_schedule, window, threshold)
    exact = isinstance(mu, FiniteSupportStrategy) and isinstance(nu, FiniteSupportStrategy)
    return IteratedIntegralReport(
        order, f.name, _measure_name(inner), _measure_name(outer),
        outer_ev.verdict, outer_ev.value, outer_ev,
        stats["points"], stats["converged"], stats["max_spread"], stats["examples"], exact,
    )


def wald_example(order=X_INNER, **kw):
    """Both players draw along ``{0..n}``."""
    seq = AveragingSequence.n_intervals(base=0)
    return iterated_asymptotic_integral(WaldIntegrand(), seq, seq, order, **kw)


def parity_example(order=X_INNER, **kw):
    """Player 1 along ``{2, 4, ..., 2n}``, player 2 along ``{-2, -4, ..., -2n}``."""
    return iterated_asymptotic_integral(
        ParityIntegrand(), AveragingSequence.progression(2, 2),
        AveragingSequence.progression(-2, -2), order, **kw)
