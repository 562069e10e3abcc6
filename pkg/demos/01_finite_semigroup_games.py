"""Finite semigroup games: the value is the invariant mean of the payoff.

Run:  python3 demos/01_finite_semigroup_games.py
"""
from fractions import Fraction

from semigroup_games import algebra, games, measures

# On a cyclic group the only invariant measure is uniform, so the game
# f(x + y) is worth the average of f.
S = algebra.cyclic_group(6)
f = [Fraction(1), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(-1), Fraction(1, 2)]
sol = games.solve_zero_sum(games.build_payoff_matrix(S, f))
print(f"Z_6 payoff {[str(v) for v in f]}")
print(f"  value {sol.value}, average {sum(f) / 6}")
print(f"  row player guarantees {sol.row_guarantee}, column player concedes at most {sol.column_guarantee}")

# Winning sets: a residue class mod k wins with probability 1/k.
for k in (2, 3):
    W = list(range(0, 6, k))
    v = games.solve_zero_sum(games.build_payoff_matrix(S, measures.indicator(6, W))).value
    print(f"  winning set {W}: value {v}")

# A chain under min has an absorbing bottom, so everything collapses onto it.
C = algebra.min_semilattice_chain(4)
rep = games.verify_main_theorem(C, [Fraction(-1, 4), 1, 1, 1])
print(f"\nmin-chain of 4: value {rep.value}, invariant measure {[str(x) for x in rep.checks[0].measure]}")

# Left-zero semigroups have no invariant measure; the game still has a value
# (the row player just names the best element) but it is not a mean of f.
L = algebra.left_zero(3)
rep = games.verify_main_theorem(L, [1, 0, -1])
print(f"\nleft-zero of 3: value {rep.value}; {rep.note}")
