"""The sets P_n of integers built from the first n primes with exponents at most n,
and densities of subsets of (N, *) along them."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .sets import IntegerSet, LeadingDigits

PN_CAP = 6


class CapExceeded(ValueError):
    pass


def first_primes(n: int) -> list:
    primes = []
    k = 2
    while len(primes) < n:
        if all(k % p for p in primes if p * p <= k):
            primes.append(k)
        k += 1
    return primes


def _check(n, cap):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise CapExceeded(f"P_{n} has {(n + 1) ** n} elements; cap is n <= {cap}")


def generate_pn(n: int, cap: int = PN_CAP) -> list:
    """Sorted list of ``prod p_i**e_i`` over exponent vectors in ``{0..n}**n``."""
    _check(n, cap)
    primes = first_primes(n)
    powers = [[p**e for e in range(n + 1)] for p in primes]
    out = []
    for combo in itertools.product(*powers):
        x = 1
        for v in combo:
            x *= v
        out.append(x)
    out.sort()
    return out


def multiplicative_density(A, n: int, cap: int = PN_CAP) -> Fraction:
    """``|A & P_n| / |P_n|`` for a set or a predicate ``A``."""
    members = generate_pn(n, cap)
    test = A.__contains__ if isinstance(A, IntegerSet) else A
    return Fraction(sum(1 for x in members if test(x)), len(members))


def benford_density_estimate(digits, n: int, cap: int = PN_CAP) -> Fraction:
    """Share of P_n whose leading decimal digit is in ``digits``.

    An exploratory estimate only: nothing here says the ratios converge.
    """
    digits = set(digits)
    if not digits:
        return Fraction(0)
    return multiplicative_density(LeadingDigits(digits), n, cap)
