"""Pick-the-bigger-integer, and iterated integrals that depend on the order.

Run:  python3 demos/04_wald_and_fubini.py
"""
from semigroup_games.asymptotics import FiniteSupportStrategy, parity_example, wald_best_response, wald_example

# Any finitely supported strategy loses outright to "one more than your max".
for p in (FiniteSupportStrategy.uniform(range(10)), FiniteSupportStrategy.parse("0:1/2,100:1/2")):
    t, v = wald_best_response(p)
    print(f"support {p.support[:4]}{'...' if len(p.support) > 4 else ''}: reply {t} pays {v}")

# With density-type strategies, whoever is integrated first wins.
for order in ("x-inner", "y-inner"):
    rep = wald_example(order)
    print(f"Wald, {order}: {rep.value} ({rep.inner_converged}/{rep.inner_points} inner limits settled)")

# The parity integrand on evens x {negative evens} gives 1 one way and 0 the other.
for order in ("x-inner", "y-inner"):
    rep = parity_example(order)
    print(f"parity, {order}: {rep.value}")
