import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from semigroup_games.asymptotics.density import (
    CONVERGED, OSCILLATING, UNDECIDED, AveragingSequence, density_along, judge, limit_density,
    parse_sequence, simplest_between,
)
from semigroup_games.asymptotics.fubini import (
    X_INNER, Y_INNER, FunctionIntegrand, WaldIntegrand, iterated_asymptotic_integral,
    parity_example, wald_example,
)
from semigroup_games.asymptotics.multiplicative import (
    CapExceeded, benford_density_estimate, first_primes, generate_pn, multiplicative_density,
)
from semigroup_games.asymptotics.sets import (
    ArithmeticSet, Everything, FiniteSet, IntervalSet, LeadingDigits, PredicateNotCountable,
    PredicateSet, SetSpecError, Union, WSet, parse_set, residue_class,
)
from semigroup_games.asymptotics.wald import (
    FiniteSupportStrategy, random_strategy, wald_best_response, wald_expected,
)
from semigroup_games.asymptotics.wset import w_count, w_oscillation_table

from oracles import w_counts_brute, w_member

Z = AveragingSequence.z_intervals()


# -- sets -----------------------------------------------------------------------

def _sets():
    return [
        residue_class(3, 1), residue_class(7, -2), ArithmeticSet(4, 1, lo=-5, hi=30),
        IntervalSet([(-3, 4), (10, 12), (5, 6)]), WSet(), FiniteSet([-4, 0, 9, 100]),
        Everything(), residue_class(2, 0).shifted(3),
    ]


@settings(max_examples=300, deadline=None)
@given(st.integers(-60, 60), st.integers(-7, 7).filter(bool), st.integers(0, 80))
def test_closed_form_counts_match_enumeration(start, step, length):
    for A in _sets():
        brute = sum(1 for i in range(length) if start + step * i in A)
        assert A.count_ap(start, step, length) == brute, A


def test_wset_membership_matches_oracle():
    W = WSet()
    assert all((n in W) == w_member(n) for n in range(-3, 70000))


def test_parse_set_forms():
    assert isinstance(parse_set("wset"), WSet)
    assert parse_set("intervals:[1,3];[2,8]") == IntervalSet([(1, 8)])
    assert 4 in parse_set("residue:4:0") and 5 in parse_set("odds")
    assert 12 in parse_set("benford:1") and 21 not in parse_set("benford:1")
    assert -4 in parse_set("finite:{-4,2}")
    with pytest.raises(SetSpecError):
        parse_set("primes")


def test_predicate_sets_refuse_beyond_cap():
    A = PredicateSet(lambda x: x % 5 == 0, "mult5", cap=1000)
    assert A.count_ap(0, 1, 1000) == 200
    with pytest.raises(PredicateNotCountable):
        A.count_ap(0, 1, 1001)


# -- densities ------------------------------------------------------------------

@pytest.mark.parametrize("spec, value", [
    ("residue:3:1", F(1, 3)), ("evens", F(1, 2)), ("finite:{1,2,3}", 0), ("all", 1),
    ("intervals:[0,1000]", 0),
])
def test_z_interval_densities(spec, value):
    rep = limit_density(Z, spec)
    assert rep.verdict == CONVERGED and rep.value == value


def test_w_density_oscillates_on_z_and_n():
    rep = limit_density(Z, "wset")
    assert rep.verdict == OSCILLATING
    # W has no negative members, so on {-n..n} the upper envelope is 1/2
    assert rep.low < F(1, 100) and F(49, 100) < rep.high < F(1, 2)
    # end the schedule just past the block start 2**256; a schedule ending deep
    # inside a block would see a flat tail and report convergence
    rep = limit_density(AveragingSequence.n_intervals(2, "length"), "wset",
                        schedule=[2**i for i in range(2, 270)])
    assert rep.verdict == OSCILLATING
    assert rep.low < F(1, 100) and rep.high > F(99, 100)


def test_length_normalization():
    seq = AveragingSequence.n_intervals(2, "length")
    assert density_along(seq, WSet(), 15) == F(2, 13)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(0, 11), st.integers(1, 12), st.integers(0, 11),
       st.integers(1, 10**9))
def test_density_is_additive_on_disjoint_sets(k1, r1, k2, r2, n):
    A = residue_class(k1, r1)
    B = IntervalSet([(-50, 70)])
    # A minus B plus B is a disjoint union
    A_out = Union([ArithmeticSet(k1, r1, hi=-51), ArithmeticSet(k1, r1, lo=71)])
    U = Union([A_out, B])
    assert density_along(Z, U, n) == density_along(Z, A_out, n) + density_along(Z, B, n)
    assert density_along(Z, A, n) == density_along(Z, A_out, n) + density_along(Z, ArithmeticSet(k1, r1, -50, 70), n)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["wset", "residue:5:2", "intervals:[0,40];[90,300]", "evens"]),
       st.integers(-3, 3), st.integers(1, 10**6))
def test_translation_moves_density_by_at_most_the_boundary(spec, t, n):
    A = parse_set(spec)
    gap = abs(density_along(Z, A.shifted(t), n) - density_along(Z, A, n))
    assert gap <= F(2 * abs(t), 2 * n + 1)


def test_progressions():
    assert density_along(parse_sequence("evens+"), residue_class(4, 0), 10) == F(1, 2)
    assert density_along(parse_sequence("evens-"), ArithmeticSet(lo=0), 10) == 0
    assert density_along(parse_sequence("progression:1:3"), residue_class(2, 0), 4) == F(1, 2)


# -- limit verdicts -------------------------------------------------------------

def test_simplest_between():
    assert simplest_between(F(3, 10), F(4, 10)) == F(1, 3)
    assert simplest_between(F(-1, 10), F(1, 10)) == 0
    assert simplest_between(F(-4, 10), F(-3, 10)) == F(-1, 3)
    assert simplest_between(F(5, 2), F(5, 2)) == F(5, 2)


def test_judge_cases():
    assert judge([F(1, 3)] * 5).verdict == CONVERGED
    assert judge([F(1, 2) + F(1, 2**k) for k in range(30, 35)]).value == F(1, 2)
    assert judge([0, 1, 0, 1, 0, 1]).verdict == OSCILLATING
    assert judge([F(1, i) for i in range(1, 8)]).verdict == UNDECIDED
    assert judge([F(1, 3)] * 3).verdict == UNDECIDED      # window not full


# -- multiplicative -------------------------------------------------------------

def test_pn_structure():
    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert generate_pn(1) == [1, 2]
    assert generate_pn(2) == sorted(2**a * 3**b for a in range(3) for b in range(3))
    with pytest.raises(CapExceeded):
        generate_pn(7)


@pytest.mark.parametrize("n", range(1, 5))
def test_evens_multiplicative_density(n):
    assert multiplicative_density(residue_class(2, 0), n) == F(n, n + 1)
    assert multiplicative_density(lambda x: x % 2 == 1, n) == F(1, n + 1)


def test_benford_estimate():
    assert benford_density_estimate(range(1, 10), 3) == 1
    assert benford_density_estimate([], 3) == 0
    assert benford_density_estimate([1], 1) == F(1, 2)   # P_1 = {1, 2}
    assert 12 in LeadingDigits([1])


# -- W set ----------------------------------------------------------------------

def test_w_count_matches_brute_force():
    brute = w_counts_brute(70000)
    for n in list(range(2, 2000)) + list(range(65000, 70001)):
        assert w_count(n) == brute[n]


def test_w_table_low_and_high_nodes():
    rows = w_oscillation_table(3)
    assert [r.low_ratio for r in rows] == [F(2, 13), F(242, 65533), F(4294902002, 2**64 - 3)]
    assert rows[0].high_ratio == F(242, 254)
    assert all(r.within_block_end_bound for r in rows)
    assert rows[0].within_block_start_bound and not rows[1].within_block_start_bound


# -- Wald -----------------------------------------------------------------------

def test_wald_uniform_on_ten():
    p = FiniteSupportStrategy.uniform(range(10))
    assert wald_best_response(p) == (10, -1)
    assert wald_expected(p, 5) == F(4, 10) - F(5, 10)


def test_wald_point_mass():
    assert wald_best_response(FiniteSupportStrategy.point_mass(3)) == (4, -1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_best_response_beats_every_finite_strategy(seed):
    p = random_strategy(random.Random(seed))
    t, v = wald_best_response(p)
    assert v == -1 and t == max(p.support) + 1
    for s in range(max(p.support) + 3):
        assert wald_expected(p, s) >= v


def test_strategy_validation():
    with pytest.raises(ValueError):
        FiniteSupportStrategy({0: F(1, 2)})
    with pytest.raises(ValueError):
        FiniteSupportStrategy({-1: 1})
    assert FiniteSupportStrategy.parse("0:1/2,1:1/2").support == [0, 1]


# -- iterated integrals ---------------------------------------------------------

def test_wald_orders_disagree():
    assert wald_example(X_INNER).value == 1
    assert wald_example(Y_INNER).value == -1


def test_parity_orders_disagree():
    x, y = parity_example(X_INNER), parity_example(Y_INNER)
    assert (x.value, y.value) == (1, 0)
    assert x.verdict == y.verdict == CONVERGED


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_finite_support_integrals_commute(seed):
    rng = random.Random(seed)
    mu, nu = random_strategy(rng, max_point=20), random_strategy(rng, max_point=20)
    f = WaldIntegrand()
    a = iterated_asymptotic_integral(f, mu, nu, X_INNER)
    b = iterated_asymptotic_integral(f, mu, nu, Y_INNER)
    assert a.exact and a.value == b.value
    assert a.value == sum(w * v * f(s, t) for s, w in mu.weights for t, v in nu.weights)


def test_density_against_point_mass():
    # density in x, point mass in y: sign(x - 3) averages to 1 along {0..n}
    seq = AveragingSequence.n_intervals(0)
    rep = iterated_asymptotic_integral(WaldIntegrand(), seq, FiniteSupportStrategy.point_mass(3), X_INNER)
    assert rep.value == 1


def test_integrand_without_closed_form_is_enumerated():
    g = FunctionIntegrand(lambda x, y: 1 if (x + y) % 3 == 0 else 0, "mod3")
    seq = AveragingSequence.n_intervals(0)
    rep = iterated_asymptotic_integral(g, seq, seq, X_INNER, inner_schedule=[3**i for i in range(2, 10)],
                                       outer_schedule=[2**i for i in range(2, 8)])
    assert rep.verdict in (CONVERGED, UNDECIDED)
    assert rep.value in (None, F(1, 3))
