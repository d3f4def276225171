"""Differences of two cubes and cabtaxi counts (sums plus differences)."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, divisors_in_range, factorize, integer_nth_root, is_perfect_square
from .cubeform import Decomposition, decompose
from .taxisearch import TaxicabRecord


def decompose_difference(N: int, F: Factorization | None = None) -> list[Decomposition]:
    """All x > y > 0 with x^3 - y^3 = N, sorted by y.

    With d = x - y, N = d(3y^2 + 3yd + d^2), so d | N, d^3 < N, and
    12N/d - 3d^2 = (6y + 3d)^2.
    """
    if N < 1:
        return []
    if F is None:
        F = factorize(N)
    out = []
    for d in divisors_in_range(F, 1, integer_nth_root(4 * N, 3)):
        s = is_perfect_square(12 * (N // d) - 3 * d * d)
        if s is None or (s - 3 * d) % 6:
            continue
        y = (s - 3 * d) // 6
        if y > 0:
            out.append(Decomposition(y + d, y, -1, 3))
    return sorted(out, key=lambda dec: dec.y)


def signed_decompositions(N: int, F: Factorization | None = None) -> list[Decomposition]:
    if F is None:
        F = factorize(N)
    sums = decompose(N, 3, F if N % 2 == 0 else F * Factorization(((2, 3),)))
    return sums + decompose_difference(N, F)


def cabtaxi_order(N: int, F: Factorization | None = None) -> int:
    """Number of distinct-part positive sums plus positive differences."""
    if N < 2:
        return 0
    return len(signed_decompositions(N, F))


@dataclass(frozen=True)
class FiveCubedReport:
    ways: int
    order_of_T: int
    order_of_125T: int

    @property
    def claim_k_plus_2(self) -> bool:
        return self.order_of_T >= self.ways + 2

    @property
    def claim_k_plus_4(self) -> bool:
        return self.order_of_125T >= self.ways + 4


def five_cubed_check(T: TaxicabRecord) -> FiveCubedReport:
    F = T.factorization
    return FiveCubedReport(
        T.ways,
        cabtaxi_order(T.value, F),
        cabtaxi_order(125 * T.value, F * Factorization(((5, 3),))),
    )
