"""Densities on (Z,+), (N,+) and (N,*), the oscillating set W, Wald's game
and iterated integrals that depend on the order of integration."""

from .density import (AveragingSequence, DensityReport, density_along, judge,
                      limit_density, parse_sequence, simplest_between)
from .fubini import (Integrand, ParityIntegrand, WaldIntegrand,
                     iterated_asymptotic_integral, parity_example, wald_example)
from .multiplicative import (CapExceeded, benford_density_estimate, first_primes,
                             generate_pn, multiplicative_density)
from .sets import (ArithmeticSet, IntervalSet, PredicateNotCountable, WSet,
                   parse_set, residue_class)
from .wald import FiniteSupportStrategy, wald_best_response, wald_payoff
from .wset import w_count, w_density_ratio, w_oscillation_table

__all__ = [
    "AveragingSequence", "DensityReport", "density_along", "judge", "limit_density",
    "parse_sequence", "simplest_between", "Integrand", "ParityIntegrand",
    "WaldIntegrand", "iterated_asymptotic_integral", "parity_example", "wald_example",
    "CapExceeded", "benford_density_estimate", "first_primes", "generate_pn",
    "multiplicative_density", "ArithmeticSet", "IntervalSet", "PredicateNotCountable",
    "WSet", "parse_set", "residue_class", "FiniteSupportStrategy", "wald_best_response",
    "wald_payoff", "w_count", "w_density_ratio", "w_oscillation_table",
]
