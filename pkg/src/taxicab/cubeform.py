"""Sums of two equal odd powers in the median/offset form (m - h)^n + (m + h)^n.

Every representation x^n + y^n = N of an even N has x and y of equal parity,
so m = (x + y)/2 and h = (y - x)/2 are integers and 2m divides N. Odd N is
handled by lifting to 2^n * N, where the pair doubles.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .arith import (
    Factorization,
    divisors_in_range,
    factorize,
    integer_nth_root,
    is_perfect_square,
    is_probable_prime,
)


@dataclass(frozen=True, order=True)
class Decomposition:
    """One representation x^n + sign*y^n = N."""

    x: int
    y: int
    sign: int = 1
    n: int = 3
    m: int | None = None
    h: int | None = None

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0 or self.sign not in (1, -1):
            raise ValueError(f"bad decomposition {self!r}")
        if self.sign == 1 and self.x > self.y:
            raise ValueError("sum form needs x <= y")
        if self.sign == -1 and self.x <= self.y:
            raise ValueError("difference form needs x > y")
        if self.m is not None:
            if self.h is None or not 0 <= self.h < self.m:
                raise ValueError("need 0 <= h < m")
            if {self.x, self.y} != {self.m - self.h, self.m + self.h}:
                raise ValueError("median/offset disagree with (x, y)")

    @property
    def value(self) -> int:
        return self.x**self.n + self.sign * self.y**self.n


class Divisibility(Enum):
    DIVISIBLE_SQUARE = "divisible-square"
    DIVISIBLE_VIOLATION = "divisible-violation"
    COPRIME = "coprime"


def _check_power(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"power must be odd and >= 3, got {n}")


def median_bounds(N: int, n: int) -> tuple[int, int] | None:
    """Inclusive range [lo, hi] that holds every median of an n-th power pair of N.

    lo is the least m with (2m)^n > N (so that m - h >= 1), hi the largest m
    with 2*m^n <= N. The upper end keeps the h = 0 boundary; the strict
    version of the bound drops it. Returns None for an empty range.
    """
    _check_power(n)
    lo = integer_nth_root(N >> n, n)
    while (2 * lo) ** n <= N:
        lo += 1
    hi = integer_nth_root(N >> 1, n)
    if lo > hi:
        return None
    return lo, hi


def median_congruence_ok(m: int, N: int, n: int, strict: bool = False) -> bool:
    """Check m = N/2 (mod n), or mod 12 / mod 20 in strict mode for n = 3 / 5.

    The strict moduli only hold for primitive pairs (gcd(m, h) = 1, m and h of
    opposite parity); use them for analysis, not for pruning general searches.
    The plain test is a necessary condition only when n is prime.
    """
    modulus = n
    if strict:
        modulus = {3: 12, 5: 20}.get(n, n)
    return (m - (N >> 1)) % modulus == 0


def lemma1_divisibility(N: int, n: int) -> Divisibility:
    if N % n:
        return Divisibility.COPRIME
    if N % (n * n):
        return Divisibility.DIVISIBLE_VIOLATION
    return Divisibility.DIVISIBLE_SQUARE


@dataclass(frozen=True)
class ForbiddenReport:
    violators: tuple[int, ...]

    @property
    def clean(self) -> bool:
        return not self.violators

    def admits_median(self, m: int) -> bool:
        """Whether m can be the median of a primitive representation."""
        return all(m % p == 0 for p in self.violators)


def is_forbidden_prime(p: int, n: int) -> bool:
    """Primes that cannot divide the cofactor N/(2m) of a primitive pair.

    Cubes: m^2 + 3h^2 only takes primes p = 1 (mod 3), so 5, 11 (mod 12) are
    out. Fifth powers: m^4 + 10m^2h^2 + 5h^4 only takes primes p = 1 (mod 5),
    so p = 3, 7, 9 (mod 10) are out; p = 1 (mod 10) is allowed
    (244 = 1^5 + 3^5 = 4 * 61 with median 2).
    """
    if n == 3:
        return p % 12 in (5, 11)
    if n == 5:
        return p % 10 in (3, 7, 9)
    raise ValueError("forbidden primes are defined for n = 3 and n = 5")


def forbidden_divisor_scan(F: Factorization, n: int) -> ForbiddenReport:
    return ForbiddenReport(tuple(p for p in F.primes if is_forbidden_prime(p, n)))


def expansion_value(m: int, h: int, n: int) -> int:
    """2m * sum_k C(n, 2k) m^(n-2k-1) h^(2k), which equals (m-h)^n + (m+h)^n."""
    return 2 * m * sum(comb(n, 2 * k) * m ** (n - 2 * k - 1) * h ** (2 * k) for k in range((n + 1) // 2))


def solve_h(N: int, m: int, n: int) -> int | None:
    """The offset h in [0, m) with (m - h)^n + (m + h)^n = N, if any."""
    if m < 1 or N % (2 * m):
        return None
    if n == 3:
        q = N // (2 * m) - m * m
        if q < 0 or q % 3:
            return None
        h = is_perfect_square(q // 3)
        return h if h is not None and h < m else None
    _check_power(n)
    lo, hi = 0, m - 1
    while lo <= hi:
        mid = (lo + hi) >> 1
        v = expansion_value(m, mid, n)
        if v == N:
            return mid
        if v < N:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _decompose_even(N: int, n: int, F: Factorization, allow_equal: bool) -> list[Decomposition]:
    bounds = median_bounds(N, n)
    if bounds is None:
        return []
    use_congruence = is_probable_prime(n)
    out = []
    for m in divisors_in_range(F, *bounds):
        if use_congruence and not median_congruence_ok(m, N, n):
            continue
        h = solve_h(N, m, n)
        if h is None or (h == 0 and not allow_equal):
            continue
        out.append(Decomposition(m - h, m + h, 1, n, m, h))
    return out


def decompose(
    N: int, n: int = 3, F: Factorization | None = None, allow_equal: bool = False
) -> list[Decomposition]:
    """All pairs 0 < x <= y with x^n + y^n = N, sorted by x.

    ``F`` must factor N when N is even and 2^n * N when N is odd. Pairs with
    x = y are returned only with ``allow_equal``.
    """
    _check_power(n)
    if N < 2:
        return []
    if N % 2 == 0:
        if F is None:
            F = factorize(N)
        return sorted(_decompose_even(N, n, F, allow_equal))

    lifted = N << n
    if F is None:
        F = factorize(N) * Factorization(((2, n),))
    seen = set()
    for d in _decompose_even(lifted, n, F, False):
        if d.x % 2 == 0 and d.y % 2 == 0:
            seen.add((d.x // 2, d.y // 2))
    return [Decomposition(x, y, 1, n) for x, y in sorted(seen)]
