"""Two-phase simplex over :class:`fractions.Fraction` with Bland's rule.

Solves

    minimize (or maximize)  c.x
    subject to              A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0

exactly.  Besides the primal optimum the solver reports the optimal dual
multipliers of every row, and, for infeasible systems, a Farkas certificate
``y`` with ``y_ub <= 0``, ``y.A <= 0`` and ``y.b > 0`` (rows in the caller's
original orientation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import to_fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class LPResult:
    status: str
    x: list | None = None
    fun: Fraction | None = None
    duals_ub: list = field(default_factory=list)
    duals_eq: list = field(default_factory=list)
    farkas_ub: list | None = None
    farkas_eq: list | None = None
    pivots: int = 0

    @property
    def success(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    """Dense tableau; ``rows[i][-1]`` is the right-hand side."""

    def __init__(self, rows, basis, ncols):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols
        self.obj = None
        self.pivots = 0

    def set_objective(self, cost):
        obj = list(cost) + [_ZERO]
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                for j, v in enumerate(row):
                    if v:
                        obj[j] -= cb * v
        self.obj = obj

    def pivot(self, r, e):
        prow = self.rows[r]
        pv = prow[e]
        if pv != 1:
            prow = [v / pv for v in prow]
            self.rows[r] = prow
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[e]
                if f:
                    for j, v in nz:
                        row[j] -= f * v
        f = self.obj[e]
        if f:
            for j, v in nz:
                self.obj[j] -= f * v
        self.basis[r] = e
        self.pivots += 1

    def run(self, allowed):
        """Bland's rule: lowest-index improving column, lowest-index leaving variable."""
        while True:
            e = next((j for j in allowed if self.obj[j] < 0), None)
            if e is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[e]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[r] < self.basis[best[1]]):
                        best = (ratio, r)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], e)

    def multipliers(self, cost, init_cols):
        """Row multipliers ``c_B B^-1`` read off the columns that started as the identity."""
        out = []
        for col in init_cols:
            s = _ZERO
            for r, b in enumerate(self.basis):
                if cost[b]:
                    v = self.rows[r][col]
                    if v:
                        s += cost[b] * v
            out.append(s)
        return out


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), maximize=False) -> LPResult:
    c = [to_fraction(v) for v in c]
    n = len(c)
    A_ub = [[to_fraction(v) for v in row] for row in A_ub]
    A_eq = [[to_fraction(v) for v in row] for row in A_eq]
    b_ub = [to_fraction(v) for v in b_ub]
    b_eq = [to_fraction(v) for v in b_eq]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("row count mismatch between A and b")
    for row in A_ub + A_eq:
        if len(row) != n:
            raise ValueError("constraint row length differs from objective length")

    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    signs = [1 if b >= 0 else -1 for b in b_ub + b_eq]
    n_art = sum(1 for i in range(m_ub) if signs[i] < 0) + m_eq
    ncols = n + m_ub + n_art

    rows, basis, init_cols = [], [], []
    art = n + m_ub
    for i in range(m):
        s = signs[i]
        if i < m_ub:
            row = [s * v for v in A_ub[i]] + [_ZERO] * (m_ub + n_art) + [s * b_ub[i]]
            row[n + i] = Fraction(s)
        else:
            k = i - m_ub
            row = [s * v for v in A_eq[k]] + [_ZERO] * (m_ub + n_art) + [s * b_eq[k]]
        if i < m_ub and s > 0:
            basis.append(n + i)
            init_cols.append(n + i)
        else:
            row[art] = _ONE
            basis.append(art)
            init_cols.append(art)
            art += 1
        rows.append(row)

    tab = _Tableau(rows, basis, ncols)
    real_cols = range(n + m_ub)

    if n_art:
        cost1 = [_ZERO] * (n + m_ub) + [_ONE] * n_art
        tab.set_objective(cost1)
        tab.run(range(ncols))
        if -tab.obj[-1] > 0:
            y = tab.multipliers(cost1, init_cols)
            y = [s * v for s, v in zip(signs, y)]
            return LPResult(INFEASIBLE, farkas_ub=y[:m_ub], farkas_eq=y[m_ub:], pivots=tab.pivots)
        # drive zero-level artificials out of the basis where possible
        for r, b in enumerate(tab.basis):
            if b >= n + m_ub:
                e = next((j for j in real_cols if tab.rows[r][j]), None)
                if e is not None:
                    tab.pivot(r, e)

    cost = [(-v if maximize else v) for v in c] + [_ZERO] * (m_ub + n_art)
    tab.set_objective(cost)
    status = tab.run(real_cols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    x = [_ZERO] * n
    for r, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.rows[r][-1]
    fun = sum((ci * xi for ci, xi in zip(c, x)), _ZERO)
    y = tab.multipliers(cost, init_cols)
    y = [s * v for s, v in zip(signs, y)]
    if maximize:
        y = [-v for v in y]
    return LPResult(OPTIMAL, x=x, fun=fun, duals_ub=y[:m_ub], duals_eq=y[m_ub:], pivots=tab.pivots)


def check_farkas(res: LPResult, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> bool:
    """True iff ``res`` carries a valid infeasibility certificate for the system."""
    if res.farkas_ub is None:
        return False
    y_ub, y_eq = res.farkas_ub, res.farkas_eq
    if any(v > 0 for v in y_ub):
        return False
    rows = list(A_ub) + list(A_eq)
    ys = list(y_ub) + list(y_eq)
    n = len(rows[0]) if rows else 0
    for j in range(n):
        if sum((y * to_fraction(row[j]) for y, row in zip(ys, rows)), _ZERO) > 0:
            return False
    rhs = sum((y * to_fraction(b) for y, b in zip(ys, list(b_ub) + list(b_eq))), _ZERO)
    return rhs > 0
