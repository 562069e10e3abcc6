"""Invariant probability measures on finite semigroups and magmas.

Run:  python3 demos/02_invariant_measures.py
"""
from semigroup_games import algebra, measures

examples = {
    "Z_2 x chain(3)": algebra.direct_product(algebra.cyclic_group(2), algebra.min_semilattice_chain(3)),
    "monogenic(3, 2)": algebra.monogenic(3, 2),
    "right-zero(3)": algebra.right_zero(3),
    "rock-paper-scissors magma": algebra.rock_paper_scissors(),
    "Steiner quasigroup": algebra.steiner3(),
}
for label, S in examples.items():
    poly = measures.invariant_measures(S)
    if poly.empty:
        print(f"{label:28s} none (Farkas multipliers {[str(y) for y in poly.farkas]})")
    else:
        print(f"{label:28s} {[str(x) for x in poly.extreme_points[0]]}")

# Tiles: two translates of the even residues cover Z_6 exactly once,
# which pins their measure to 1/2.
S = algebra.cyclic_group(6)
rep = measures.tile_measure_check(S, [0, 2, 4], [0, 1])
print(f"\n{{0,2,4}} is a {rep.k}-tile of Z_6 with measure {rep.expected}")
lo, hi = measures.im_bounds(S, measures.indicator(6, [0, 1]))
print(f"bounds on m({{0,1}}): [{lo}, {hi}]")
