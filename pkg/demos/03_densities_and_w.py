"""Densities along averaging sequences, and a set with no density.

Run:  python3 demos/03_densities_and_w.py
"""
from semigroup_games.asymptotics import (
    AveragingSequence, first_primes, limit_density, multiplicative_density, residue_class,
    w_oscillation_table,
)

Z = AveragingSequence.z_intervals()
for spec in ("residue:3:1", "evens", "finite:{1,2,3}", "wset"):
    rep = limit_density(Z, spec)
    detail = rep.value if rep.value is not None else f"between {float(rep.low):.4f} and {float(rep.high):.4f}"
    print(f"{spec:15s} along [-n, n]: {rep.verdict}, {detail}")

# W alternates long blocks in and out, so its running density swings
# between nearly 0 and nearly 1 at the block boundaries.
print("\n j  ratio just before block   1 - ratio just after block")
for row in w_oscillation_table(5):
    print(f"{row.j:2d}  {float(row.low_ratio):.3e}              {float(1 - row.high_ratio):.3e}")

# In (N, *) the averaging sets P_n use the first n primes with exponents <= n.
print(f"\nfirst primes {first_primes(5)}")
for n in range(1, 6):
    print(f"  P_{n}: share of even numbers {multiplicative_density(residue_class(2, 0), n)}")
