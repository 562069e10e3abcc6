"""The semigroup game: player 1 picks x, player 2 picks y, player 1 receives f(x*y)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import lp
from .algebra import FiniteSemigroup, parse_subset
from .measures import invariant_measures
from .rational import dot, to_fraction

ROW = "row"
COLUMN = "column"


class PayoffError(ValueError):
    pass


class CertificateError(ArithmeticError):
    """Raised if a computed solution fails its own exact minimax check."""


def payoff_function(values) -> list:
    f = [to_fraction(v) for v in values]
    bad = [v for v in f if not -1 <= v <= 1]
    if bad:
        raise PayoffError(f"payoff values must lie in [-1, 1], got {bad[0]}")
    return f


def probability_vector(p) -> list:
    p = [to_fraction(v) for v in p]
    if any(v < 0 for v in p) or sum(p) != 1:
        raise ValueError("not a probability vector")
    return p


def parse_payoff(spec: str, n: int, rng=None) -> list:
    """``inline:1,-1/2,0``, ``winset:<subset>``, ``signed:<subset>``, ``random``,
    ``file:<path>`` or a bare path with one rational per line."""
    spec = spec.strip()
    if spec.startswith("inline:"):
        f = payoff_function(v for v in spec[7:].split(",") if v.strip())
    elif spec.startswith("winset:"):
        W = set(parse_subset(spec[7:], n))
        f = [Fraction(int(i in W)) for i in range(n)]
    elif spec.startswith("signed:"):
        W = set(parse_subset(spec[7:], n))
        f = [Fraction(1 if i in W else -1) for i in range(n)]
    elif spec == "random":
        f = random_payoff(rng or random.Random(0), n)
    else:
        path = Path(spec[5:] if spec.startswith("file:") else spec)
        if not path.exists():
            raise PayoffError(f"unrecognized payoff spec {spec!r}")
        f = payoff_function(ln for ln in path.read_text().splitlines() if ln.strip())
    if len(f) != n:
        raise PayoffError(f"payoff has {len(f)} values, semigroup has {n} elements")
    return f


def random_payoff(rng: random.Random, n: int, max_den: int = 12) -> list:
    out = []
    for _ in range(n):
        d = rng.randint(1, max_den)
        out.append(Fraction(rng.randint(-d, d), d))
    return out


def build_payoff_matrix(S: FiniteSemigroup, f) -> list:
    f = payoff_function(f)
    if len(f) != S.n:
        raise PayoffError(f"payoff has {len(f)} values, semigroup has {S.n} elements")
    return [[f[S.table[x, y]] for y in range(S.n)] for x in range(S.n)]


def row_payoffs(M, q) -> list:
    """Expected payoff of every pure row against column strategy q."""
    return [dot(row, q) for row in M]


def column_payoffs(M, p) -> list:
    """Expected payoff (to the row player) of every pure column against row strategy p."""
    return [sum((p[x] * M[x][y] for x in range(len(M))), Fraction(0)) for y in range(len(M[0]))]


@dataclass
class GameSolution:
    value: Fraction
    p_star: list
    q_star: list
    row_guarantee: Fraction     # min over columns against p_star
    column_guarantee: Fraction  # max over rows against q_star
    pivots: int = 0

    def to_dict(self):
        return {
            "value": self.value,
            "p_star": self.p_star,
            "q_star": self.q_star,
            "certificates": {"row_guarantee": self.row_guarantee, "column_guarantee": self.column_guarantee},
        }


def solve_zero_sum(M) -> GameSolution:
    """Exact minimax value and optimal mixed strategies of the matrix game ``M``.

    The matrix is shifted to be strictly positive and the column player's LP
    ``max sum(w) s.t. M' w <= 1, w >= 0`` is solved; the row player's
    strategy comes from the optimal dual multipliers of the same tableau.
    """
    M = [[to_fraction(v) for v in row] for row in M]
    if not M or not M[0]:
        raise ValueError("empty payoff matrix")
    ncol = len(M[0])
    shift = 1 - min(min(row) for row in M)
    Mp = [[v + shift for v in row] for row in M]
    res = lp.linprog([1] * ncol, A_ub=Mp, b_ub=[1] * len(M), maximize=True)
    if not res.success:  # cannot happen for a strictly positive matrix
        raise CertificateError(f"game LP ended {res.status}")
    total = res.fun
    q = [w / total for w in res.x]
    p = [u / total for u in res.duals_ub]
    value = 1 / total - shift
    row_guarantee = min(column_payoffs(M, p))
    column_guarantee = max(row_payoffs(M, q))
    if not (row_guarantee == value == column_guarantee and sum(p) == 1 and min(p) >= 0):
        raise CertificateError(f"minimax certificate failed: {row_guarantee} / {value} / {column_guarantee}")
    return GameSolution(value, p, q, row_guarantee, column_guarantee, res.pivots)


def best_response(M, strategy, side: str):
    """Best pure reply to ``strategy``.

    ``side=COLUMN``: strategy is the row player's mixed strategy; returns the
    column minimizing the row player's expected payoff.  ``side=ROW``: strategy
    is the column player's; returns the row maximizing it.  Ties go to the
    lowest index.
    """
    s = [to_fraction(v) for v in strategy]
    if side == COLUMN:
        pay = column_payoffs(M, s)
        best = min(pay)
    elif side == ROW:
        pay = row_payoffs(M, s)
        best = max(pay)
    else:
        raise ValueError(f"side must be {ROW!r} or {COLUMN!r}")
    return pay.index(best), best


def iterated_payoff(M, p, q, order: str = "x-inner") -> Fraction:
    """Payoff as an iterated sum.  ``x-inner`` sums over the row index first."""
    n_rows, n_cols = len(M), len(M[0])
    if order == "x-inner":
        total = Fraction(0)
        for y in range(n_cols):
            inner = Fraction(0)
            for x in range(n_rows):
                inner += p[x] * M[x][y]
            total += q[y] * inner
        return total
    if order == "y-inner":
        total = Fraction(0)
        for x in range(n_rows):
            inner = Fraction(0)
            for y in range(n_cols):
                inner += q[y] * M[x][y]
            total += p[x] * inner
        return total
    raise ValueError("order must be 'x-inner' or 'y-inner'")


@dataclass
class MeasureCheck:
    measure: list
    ell_f: Fraction
    equals_value: bool
    row_guarantee: Fraction      # worst column reply to the measure played by player 1
    column_guarantee: Fraction   # best row reply to the measure played by player 2

    @property
    def optimal_both_sides(self):
        return self.row_guarantee == self.ell_f == self.column_guarantee


@dataclass
class TheoremReport:
    applicable: bool
    value: Fraction
    solution: GameSolution
    checks: list = field(default_factory=list)
    note: str = ""

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return False
        return all(c.equals_value and c.optimal_both_sides for c in self.checks)

    def to_dict(self):
        return {
            "applicable": self.applicable,
            "value": self.value,
            "holds": self.holds,
            "note": self.note,
            "solution": self.solution,
            "measures": [
                {
                    "measure": c.measure,
                    "ell_f": c.ell_f,
                    "equals_value": c.equals_value,
                    "row_guarantee": c.row_guarantee,
                    "column_guarantee": c.column_guarantee,
                    "optimal_both_sides": c.optimal_both_sides,
                }
                for c in self.checks
            ],
        }


def verify_main_theorem(S: FiniteSemigroup, f, polytope=None) -> TheoremReport:
    """Solve the game by LP and compare with ``m(f)`` for the invariant measures ``m``."""
    f = payoff_function(f)
    M = build_payoff_matrix(S, f)
    sol = solve_zero_sum(M)
    poly = polytope or invariant_measures(S)
    if poly.empty:
        return TheoremReport(False, sol.value, sol, note="theorem not applicable: no invariant measure")
    checks = []
    for m in poly.extreme_points:
        ell_f = dot(m, f)
        checks.append(MeasureCheck(
            m, ell_f, ell_f == sol.value,
            min(column_payoffs(M, m)), max(row_payoffs(M, m)),
        ))
    note = "" if poly.enumerated else "extreme points not fully enumerated; listed points checked"
    return TheoremReport(True, sol.value, sol, checks, note)

