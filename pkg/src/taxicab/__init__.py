"""Sums of two equal odd powers and the cubic-multiplier taxicab search."""

from .arith import Factorization, factorize, integer_nth_root, is_perfect_square, is_probable_prime
from .cabtaxi import cabtaxi_order, decompose_difference, five_cubed_check
from .cubeform import Decomposition, decompose, median_bounds, solve_h
from .taxisearch import SearchCheckpoint, TaxicabRecord, search_range, search_step

__all__ = [
    "Decomposition",
    "Factorization",
    "SearchCheckpoint",
    "TaxicabRecord",
    "cabtaxi_order",
    "decompose",
    "decompose_difference",
    "factorize",
    "five_cubed_check",
    "integer_nth_root",
    "is_perfect_square",
    "is_probable_prime",
    "median_bounds",
    "search_range",
    "search_step",
    "solve_h",
]
