"""Invariant finitely additive probability measures on a finite semigroup or magma.

On a finite set a mean is a probability vector ``m`` and invariance under the
translation ``L_s`` means ``m(f o L_s) = m(f)`` for every ``f``.  Taking ``f``
to be the indicator of a point ``i`` turns this into finitely many linear
equations: the mass of the fibre ``{x : s*x = i}`` equals ``m[i]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .algebra import FiniteSemigroup, subset_indices, verify_tile
from .rational import dot, to_fraction

EMPTY = "empty"
NONEMPTY = "nonempty"

# vertex enumeration is attempted only up to this many equality-defect dimensions
MAX_ENUM_DIM = 8
MAX_ENUM_BASES = 50_000


class NoInvariantMeasure(ArithmeticError):
    pass


class NotATile(ValueError):
    pass


@dataclass
class InvariantMeasurePolytope:
    semigroup: FiniteSemigroup
    equations: list                      # independent rows (coefficients, rhs), a subset of the full system
    status: str
    extreme_points: list = field(default_factory=list)
    unique: bool = False
    enumerated: bool = False             # True when extreme_points is the complete vertex list
    defect: int = 0                      # n - rank of the equality system
    farkas: list | None = None           # certificate over ``equations`` when empty

    @property
    def empty(self) -> bool:
        return self.status == EMPTY

    def A(self):
        return [row for row, _ in self.equations]

    def b(self):
        return [rhs for _, rhs in self.equations]

    def to_dict(self):
        return {
            "semigroup": self.semigroup.name,
            "n": self.semigroup.n,
            "associative": self.semigroup.associative,
            "status": self.status,
            "unique": self.unique,
            "enumerated": self.enumerated,
            "defect": self.defect,
            "extreme_points": self.extreme_points,
        }


def invariance_equations(S: FiniteSemigroup):
    """The full constraint system as integer rows ``(coeffs, rhs)``: normalization
    first, then one fibre equation per (side, s, i), duplicates and zero rows dropped."""
    n = S.n
    rows = [(tuple([1] * n), 1)]
    seen = {rows[0][0]}
    for table in (S.table, S.table.T):
        for s in range(n):
            image = table[s]
            for i in range(n):
                coeffs = [0] * n
                for x in range(n):
                    if image[x] == i:
                        coeffs[x] += 1
                coeffs[i] -= 1
                key = tuple(coeffs)
                if any(key) and key not in seen:
                    seen.add(key)
                    rows.append((key, 0))
    return rows


def _independent_rows(rows, n):
    """Greedy selection of linearly independent augmented rows, fraction-free.

    Returns (selected rows, consistent) where ``consistent`` is False when some
    row reduces to ``0 = c`` with ``c != 0``.
    """
    basis = []          # (pivot column, reduced integer row of length n + 1)
    chosen = []
    rows = list(rows)
    for k, (coeffs, rhs) in enumerate(rows):
        v = list(coeffs) + [rhs]
        for col, brow in basis:
            a = v[col]
            if a:
                p = brow[col]
                v = [p * vi - a * bi for vi, bi in zip(v, brow)]
                g = math.gcd(*v)
                if g > 1:
                    v = [vi // g for vi in v]
        piv = next((j for j in range(n) if v[j]), None)
        if piv is None:
            if v[n]:
                chosen.append((coeffs, rhs))
                return chosen, False
            continue
        basis.append((piv, v))
        chosen.append((coeffs, rhs))
        if len(basis) == n:
            # full rank: the remaining rows only need checking against the unique solution
            x = _solve_square([c for c, _ in chosen], [r for _, r in chosen])
            for c, r in rows[k + 1:]:
                if sum(ci * xi for ci, xi in zip(c, x) if ci) != r:
                    chosen.append((c, r))
                    return chosen, False
            break
    return chosen, True


def _solve_square(A, b):
    """Exact Gauss-Jordan; None when singular."""
    m = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for c in range(m):
        p = next((r for r in range(c, m) if M[r][c]), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for r in range(m):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[c])]
    return [row[-1] for row in M]


def _vertices(A, b, n):
    """All basic feasible solutions of {A m = b, m >= 0} with A of full row rank."""
    r = len(A)
    found = []
    for cols in itertools.combinations(range(n), r):
        sub = [[row[j] for j in cols] for row in A]
        sol = _solve_square(sub, b)
        if sol is None or any(v < 0 for v in sol):
            continue
        m = [Fraction(0)] * n
        for j, v in zip(cols, sol):
            m[j] = v
        if m not in found:
            found.append(m)
    return found


def invariant_measures(S: FiniteSemigroup) -> InvariantMeasurePolytope:
    n = S.n
    rows, consistent = _independent_rows(invariance_equations(S), n)
    A = [list(c) for c, _ in rows]
    b = [rhs for _, rhs in rows]
    defect = n - len(rows) if consistent else 0
    res = lp.linprog([0] * n, A_eq=A, b_eq=b)
    if not res.success:
        return InvariantMeasurePolytope(S, rows, EMPTY, defect=defect, farkas=res.farkas_eq)
    poly = InvariantMeasurePolytope(S, rows, NONEMPTY, defect=defect)
    if defect == 0:
        poly.extreme_points = [res.x]
        poly.unique = poly.enumerated = True
    elif defect <= MAX_ENUM_DIM and math.comb(n, len(rows)) <= MAX_ENUM_BASES:
        poly.extreme_points = _vertices(A, b, n)
        poly.enumerated = True
        poly.unique = len(poly.extreme_points) == 1
    else:
        # the phase-one basic solution is itself a vertex
        poly.extreme_points = [res.x]
        poly.unique = all(
            lp.linprog(e, A_eq=A, b_eq=b).fun == lp.linprog(e, A_eq=A, b_eq=b, maximize=True).fun
            for e in ([int(i == j) for j in range(n)] for i in range(n))
        )
        poly.enumerated = poly.unique
    return poly


def is_invariant(S: FiniteSemigroup, m) -> bool:
    """Direct check of the fibre equations and of the probability constraints."""
    m = [to_fraction(v) for v in m]
    if len(m) != S.n or any(v < 0 for v in m) or sum(m) != 1:
        return False
    for table in (S.table, S.table.T):
        for s in range(S.n):
            push = [Fraction(0)] * S.n
            for x in range(S.n):
                push[table[s, x]] += m[x]
            if push != m:
                return False
    return True


def _poly(S_or_poly):
    if isinstance(S_or_poly, InvariantMeasurePolytope):
        return S_or_poly
    return invariant_measures(S_or_poly)


def im_bounds(S, f):
    """Exact (min, max) of ``m(f)`` over all invariant measures ``m``."""
    poly = _poly(S)
    f = [to_fraction(v) for v in f]
    if len(f) != poly.semigroup.n:
        raise ValueError("payoff length does not match the semigroup")
    if poly.empty:
        raise NoInvariantMeasure(f"{poly.semigroup.name or 'semigroup'} has no invariant measure")
    if poly.unique:
        v = dot(poly.extreme_points[0], f)
        return v, v
    if poly.enumerated:
        vals = [dot(m, f) for m in poly.extreme_points]
        return min(vals), max(vals)
    lo = lp.linprog(f, A_eq=poly.A(), b_eq=poly.b())
    hi = lp.linprog(f, A_eq=poly.A(), b_eq=poly.b(), maximize=True)
    return lo.fun, hi.fun


def has_property_im(S, f) -> bool:
    lo, hi = im_bounds(S, f)
    return lo == hi


def indicator(n, W):
    chosen = set(W)
    return [Fraction(int(i in chosen)) for i in range(n)]


@dataclass
class TileMeasureReport:
    k: int
    expected: Fraction
    measures: list            # m(W) for each listed extreme point
    bounds: tuple             # (min, max) of m(W) over the whole polytope
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def tile_measure_check(S: FiniteSemigroup, W, translates) -> TileMeasureReport:
    W = subset_indices(S, W)
    tile = verify_tile(S, W, translates)
    if not tile:
        raise NotATile(f"translates do not partition S (uncovered={tile.uncovered}, overlap={tile.overlap})")
    poly = invariant_measures(S)
    if poly.empty:
        raise NoInvariantMeasure("no invariant measure to test the tile against")
    chi = indicator(S.n, W)
    expected = Fraction(1, tile.k)
    values = [dot(m, chi) for m in poly.extreme_points]
    bounds = im_bounds(poly, chi)
    violations = [(i, v) for i, v in enumerate(values) if v != expected]
    if bounds != (expected, expected):
        violations.append(("bounds", bounds))
    return TileMeasureReport(tile.k, expected, values, bounds, violations)
