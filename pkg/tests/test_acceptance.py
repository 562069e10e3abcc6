"""End-to-end acceptance criteria, one test each, with the stated time budgets.

Each test prints a single ``[PASS]``/``[FAIL]`` line (collected again in the
terminal summary) before asserting.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from semigroup_games.algebra import (
    cyclic_group, left_zero, min_semilattice_chain, random_semigroup, right_zero,
    rock_paper_scissors,
)
from semigroup_games.asymptotics.density import CONVERGED
from semigroup_games.asymptotics.fubini import X_INNER, Y_INNER, parity_example, wald_example
from semigroup_games.asymptotics.multiplicative import generate_pn, multiplicative_density
from semigroup_games.asymptotics.sets import residue_class
from semigroup_games.asymptotics.wald import random_strategy, wald_best_response
from semigroup_games.asymptotics.wset import w_count, w_oscillation_table
from semigroup_games.games import (
    build_payoff_matrix, column_payoffs, iterated_payoff, random_payoff, row_payoffs,
    solve_zero_sum, verify_main_theorem,
)
from semigroup_games.measures import im_bounds, indicator, invariant_measures, tile_measure_check

from conftest import ACCEPTANCE_LINES
from oracles import w_counts_brute

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(number, title, budget):
    """Collect failures, time the block and emit one verdict line."""
    state = {"failures": []}
    t0 = time.perf_counter()
    yield state["failures"]
    elapsed = time.perf_counter() - t0
    fails = state["failures"]
    if elapsed >= budget:
        fails.append(f"took {elapsed:.2f}s, budget {budget}s")
    tag = "PASS" if not fails else "FAIL"
    line = f"[{tag}] criterion {number:>2}: {title} ({elapsed:.2f}s / {budget}s)"
    if fails:
        line += " :: " + "; ".join(map(str, fails[:3]))
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not fails, line


def test_01_cyclic_group_value_is_uniform_mean():
    rng = random.Random(1)
    sizes = list(range(2, 25))
    with criterion(1, "Z_n games: value = mean(f), uniform strategy optimal", 10) as fails:
        for trial in range(100):
            n = sizes[trial % len(sizes)]
            f = random_payoff(rng, n)
            M = build_payoff_matrix(cyclic_group(n), f)
            sol = solve_zero_sum(M)
            mean = sum(f) / n
            uniform = [F(1, n)] * n
            if sol.value != mean:
                fails.append(f"n={n}: value {sol.value} != {mean}")
            if not (min(column_payoffs(M, uniform)) == mean == max(row_payoffs(M, uniform))):
                fails.append(f"n={n}: uniform strategy not certified")


def test_02_winning_sets_in_z6():
    S = cyclic_group(6)
    with criterion(2, "Z_6 winning sets: {0,1,2} -> 1/2, residue mod k -> 1/k", 1) as fails:
        v = solve_zero_sum(build_payoff_matrix(S, indicator(6, [0, 1, 2]))).value
        if v != F(1, 2):
            fails.append(f"W={{0,1,2}} gave {v}")
        for k in (1, 2, 3, 6):
            v = solve_zero_sum(build_payoff_matrix(S, indicator(6, range(0, 6, k)))).value
            if v != F(1, k):
                fails.append(f"k={k} gave {v}")


def test_03_chains_point_mass_at_bottom():
    rng = random.Random(3)
    with criterion(3, "min-chains 2..10: unique measure delta_bottom, value f(bottom)", 1) as fails:
        for n in range(2, 11):
            S = min_semilattice_chain(n)
            poly = invariant_measures(S)
            if not (poly.unique and poly.extreme_points == [[1] + [0] * (n - 1)]):
                fails.append(f"n={n}: measures {poly.extreme_points}")
            f = random_payoff(rng, n)
            v = solve_zero_sum(build_payoff_matrix(S, f)).value
            if v != f[0]:
                fails.append(f"n={n}: value {v} != f(bottom) {f[0]}")


def test_04_empty_polytopes():
    cases = [left_zero(n) for n in range(2, 7)] + [right_zero(n) for n in range(2, 7)]
    cases.append(rock_paper_scissors())
    with criterion(4, "left/right-zero and a commutative magma: empty polytope", 1) as fails:
        for S in cases:
            if not invariant_measures(S).empty:
                fails.append(f"{S.name}: polytope not empty")
            rep = verify_main_theorem(S, [1] + [0] * (S.n - 1))
            if rep.applicable or "theorem not applicable" not in rep.note:
                fails.append(f"{S.name}: report says {rep.note!r}")
        rps = rock_paper_scissors()
        if not (rps.table == rps.table.T).all() or rps.associative:
            fails.append("magma witness is not commutative and non-associative")


def test_05_tiles_get_one_over_k():
    with criterion(5, "k-tiles in Z_n (k | n <= 24): every invariant measure gives 1/k", 5) as fails:
        for n in range(1, 25):
            S = cyclic_group(n)
            for k in (d for d in range(1, n + 1) if n % d == 0):
                rep = tile_measure_check(S, list(range(0, n, k)), list(range(k)))
                if not rep.ok or any(m != F(1, k) for m in rep.measures):
                    fails.append(f"n={n}, k={k}: {rep.violations}")


def test_06_finite_fubini():
    rng = random.Random(6)

    def rand_prob(n):
        raw = [rng.randint(0, 6) for _ in range(n)]
        raw[rng.randrange(n)] += 1
        return [F(v, sum(raw)) for v in raw]

    with criterion(6, "1000 finite games: iterated payoff independent of order", 10) as fails:
        for _ in range(1000):
            S = random_semigroup(rng, 8)
            M = build_payoff_matrix(S, random_payoff(rng, S.n))
            p, q = rand_prob(S.n), rand_prob(S.n)
            a, b = iterated_payoff(M, p, q, X_INNER), iterated_payoff(M, p, q, Y_INNER)
            if a != b:
                fails.append(f"{S.name}: {a} != {b}")


def test_07_w_oscillation():
    with criterion(7, "W: counts vs brute force, liminf 0 / limsup 1 envelope", 10) as fails:
        limit = 10**6
        brute = w_counts_brute(limit)
        bad = next((n for n in range(2, limit + 1) if w_count(n) != brute[n]), None)
        if bad is not None:
            fails.append(f"w_count({bad}) = {w_count(bad)} != {brute[bad]}")
        rows = w_oscillation_table(6)
        expected = [F(2, 13), F(242, 65533), F(4294902002, 2**64 - 3)]
        if [r.low_ratio for r in rows[:3]] != expected:
            fails.append(f"low ratios {[r.low_ratio for r in rows[:3]]}")
        lows = [r.low_ratio for r in rows]
        highs = [r.high_ratio for r in rows]
        if any(b >= a for a, b in zip(lows, lows[1:])):
            fails.append("low ratios not strictly decreasing")
        if highs[0] != F(242, 254):
            fails.append(f"first high ratio {highs[0]}")
        if any(b <= a for a, b in zip(highs, highs[1:])) or min(highs) < F(95, 100):
            fails.append("high ratios not strictly increasing above 0.95")
        gaps = [1 - h for h in highs]
        if any(b >= a for a, b in zip(gaps, gaps[1:])):
            fails.append("1 - high ratio does not shrink")


def test_08_multiplicative_density():
    evens = residue_class(2, 0)
    with criterion(8, "|P_n| = (n+1)^n and evens density n/(n+1), n <= 5", 30) as fails:
        for n in range(1, 6):
            size = len(set(generate_pn(n)))
            if size != (n + 1) ** n:
                fails.append(f"|P_{n}| = {size}")
            d = multiplicative_density(evens, n)
            if d != F(n, n + 1):
                fails.append(f"n={n}: density {d}")


def test_09_wald_collapse():
    rng = random.Random(9)
    with criterion(9, "Wald: finite strategies lose to -1; x-inner +1, y-inner -1", 5) as fails:
        for _ in range(100):
            p = random_strategy(rng)
            t, v = wald_best_response(p)
            if v != -1:
                fails.append(f"{p.weights}: best reply {t} pays {v}")
        for order, target in ((X_INNER, 1), (Y_INNER, -1)):
            rep = wald_example(order)
            if rep.verdict != CONVERGED or rep.value != target:
                fails.append(f"{order}: {rep.verdict} {rep.value}")
            if rep.inner_converged != rep.inner_points or rep.outer.spread != 0:
                fails.append(f"{order}: weak stabilization evidence")


def test_10_parity_fubini_failure():
    with criterion(10, "parity integrand: x-inner 1, y-inner 0", 1) as fails:
        x, y = parity_example(X_INNER), parity_example(Y_INNER)
        if (x.value, y.value) != (1, 0):
            fails.append(f"got {x.value} and {y.value}")


def test_11_im_closure():
    rng = random.Random(11)
    with criterion(11, "IM additivity and closure on 100 random semigroups", 30) as fails:
        done = 0
        while done < 100:
            S = random_semigroup(rng, 12)
            poly = invariant_measures(S)
            if poly.empty:
                continue
            done += 1
            labels = [rng.choice("ABN") for _ in range(S.n)]
            A = [i for i, c in enumerate(labels) if c == "A"]
            B = [i for i, c in enumerate(labels) if c == "B"]
            union = sorted(A + B)
            a, b, u = (im_bounds(poly, indicator(S.n, X)) for X in (A, B, union))
            if a[0] == a[1] and b[0] == b[1]:
                if u[0] != u[1]:
                    fails.append(f"{S.name}: union of IM sets lacks IM")
                if u[0] != a[0] + b[0]:
                    fails.append(f"{S.name}: m(A u B) {u[0]} != {a[0]} + {b[0]}")
            # difference: A is a subset of A u B
            d = im_bounds(poly, indicator(S.n, B))
            if a[0] == a[1] and u[0] == u[1] and not (d[0] == d[1] == u[0] - a[0]):
                fails.append(f"{S.name}: difference not IM")
