"""Exact semigroup games on finite semigroups, invariant measures, and
asymptotic densities on (Z,+), (N,+) and (N,*)."""

from .algebra import (FiniteSemigroup, NonAssociative, NonClosed, BadParam,
                      cyclic_group, direct_product, left_zero, make_standard,
                      min_semilattice_chain, null_semigroup, parse_semigroup,
                      right_zero, translation_maps, validate_cayley, verify_tile)
from .games import (GameSolution, best_response, build_payoff_matrix,
                    iterated_payoff, solve_zero_sum, verify_main_theorem)
from .measures import (InvariantMeasurePolytope, NoInvariantMeasure, NotATile,
                       has_property_im, im_bounds, invariant_measures,
                       tile_measure_check)

__version__ = "0.1.0"

__all__ = [
    "FiniteSemigroup", "NonAssociative", "NonClosed", "BadParam", "cyclic_group",
    "direct_product", "left_zero", "make_standard", "min_semilattice_chain",
    "null_semigroup", "parse_semigroup", "right_zero", "translation_maps",
    "validate_cayley", "verify_tile", "GameSolution", "best_response",
    "build_payoff_matrix", "iterated_payoff", "solve_zero_sum", "verify_main_theorem",
    "InvariantMeasurePolytope", "NoInvariantMeasure", "NotATile", "has_property_im",
    "im_bounds", "invariant_measures", "tile_measure_check",
]
