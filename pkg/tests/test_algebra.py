import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semigroup_games.algebra import (
    AlgebraError, BadParam, NonAssociative, NonClosed, cyclic_group, direct_product, left_zero,
    make_standard, min_semilattice_chain, monogenic, parse_semigroup, parse_subset,
    random_semigroup, read_cayley_csv, right_zero, rock_paper_scissors, steiner3,
    transformation_semigroup, translation_maps, validate_cayley, verify_tile, write_cayley_csv,
)

from oracles import is_associative, tile_union


def test_cyclic_table():
    S = cyclic_group(5)
    assert S.mul(3, 4) == 2 and S.associative


@pytest.mark.parametrize("n", range(1, 13))
def test_group_translations_are_bijections(n):
    left, right = translation_maps(cyclic_group(n))
    for s in range(n):
        assert sorted(left[s]) == list(range(n))
        assert sorted(right[:, s]) == list(range(n)) or sorted(right[s]) == list(range(n))


def test_translation_maps_directions():
    S = left_zero(3)
    left, right = translation_maps(S)
    # x -> s*x is constant on a left-zero semigroup; x -> x*s is the identity
    assert all(len(set(left[s])) == 1 for s in range(3))
    assert all(list(right[s]) == [0, 1, 2] for s in range(3))


def test_standard_families_are_associative():
    for S in [left_zero(4), right_zero(4), min_semilattice_chain(5), monogenic(3, 4),
              make_standard("null", 4), transformation_semigroup([[1, 0, 2], [0, 0, 2]])]:
        assert S.associative and is_associative(S.table.tolist())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_direct_products_stay_associative(seed):
    rng = random.Random(seed)
    S, T = random_semigroup(rng, 5), random_semigroup(rng, 4)
    P = direct_product(S, T)
    assert P.n == S.n * T.n
    assert is_associative(P.table.tolist())
    a, b = rng.randrange(P.n), rng.randrange(P.n)
    assert P.mul(a, b) == S.mul(a // T.n, b // T.n) * T.n + T.mul(a % T.n, b % T.n)


def test_steiner_magma_is_commutative_but_not_associative():
    S = steiner3()
    assert (S.table == S.table.T).all()
    assert not S.associative
    with pytest.raises(NonAssociative) as exc:
        validate_cayley(S.table.tolist())
    x, y, z = exc.value.triple
    t = S.table
    assert t[t[x, y], z] != t[x, t[y, z]]


def test_rps_is_commutative_not_associative():
    S = rock_paper_scissors()
    assert (S.table == S.table.T).all() and not S.associative


def test_validation_errors():
    with pytest.raises(NonClosed):
        validate_cayley([[0, 2], [1, 0]])
    with pytest.raises(AlgebraError):
        validate_cayley([[0, 1], [1]])
    with pytest.raises(BadParam):
        cyclic_group(0)
    magma = validate_cayley(steiner3().table.tolist(), require_associative=False)
    assert not magma.associative


def test_table_is_read_only():
    S = cyclic_group(3)
    with pytest.raises(ValueError):
        S.table[0, 0] = 2


def test_exhaustive_associativity_on_two_elements():
    from oracles import all_magmas
    for table in all_magmas(2):
        S = validate_cayley(table, require_associative=False)
        assert S.associative == is_associative(table)


def test_csv_round_trip(tmp_path):
    S = direct_product(cyclic_group(2), min_semilattice_chain(3))
    path = tmp_path / "s.csv"
    write_cayley_csv(S, path)
    T = read_cayley_csv(path)
    assert np.array_equal(S.table, T.table)
    U = parse_semigroup(f"csv:{path}")
    assert np.array_equal(S.table, U.table)


def test_parse_semigroup_forms():
    assert parse_semigroup("cyclic:6").n == 6
    assert parse_semigroup("product(cyclic:2,minchain:3)").n == 6
    assert parse_semigroup("product(product(cyclic:2,cyclic:2),leftzero:2)").n == 8
    assert parse_semigroup("random:5", rng=random.Random(1)).n <= 5
    with pytest.raises(NonAssociative):
        parse_semigroup("rps")
    assert parse_semigroup("rps", require_associative=False).n == 3
    with pytest.raises(BadParam):
        parse_semigroup("cyclic:x")


def test_parse_subset():
    assert parse_subset("0,2,4", 6) == [0, 2, 4]
    assert parse_subset("residue:3:1", 9) == [1, 4, 7]
    assert parse_subset("all", 3) == [0, 1, 2]
    assert parse_subset("none", 3) == []
    with pytest.raises(BadParam):
        parse_subset("0,7", 6)


@pytest.mark.parametrize("n", [4, 6, 12])
def test_tiles_match_brute_force_union(n):
    S = cyclic_group(n)
    for k in (d for d in range(1, n + 1) if n % d == 0):
        W = list(range(0, n, k))
        check = verify_tile(S, W, list(range(k)))
        covered, total = tile_union(S.table.tolist(), W, range(k))
        assert check.is_tile == (covered == set(range(n)) and total == n)
        assert check.is_tile and check.k == k


def test_non_tile_reports_overlap_and_gap():
    S = cyclic_group(6)
    check = verify_tile(S, [0, 1, 2], [0, 1])
    assert not check and check.overlap is not None
    check = verify_tile(S, [0, 2, 4], [0, 2])
    assert not check and check.uncovered == 1


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_random_semigroups_are_valid(seed):
    S = random_semigroup(random.Random(seed), 10)
    assert 1 <= S.n <= 10
    assert is_associative(S.table.tolist())
