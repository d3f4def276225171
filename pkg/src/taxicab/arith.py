"""Exact integer primitives: roots, squares, primality, factoring, divisors."""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Iterable, Iterator

TRIAL_LIMIT = 10**6
MATERIALIZE_LIMIT = 2**20
DEFAULT_MAX_DIGITS = 60

# Miller-Rabin with these bases is deterministic below this bound.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DETERMINISTIC_PRIME_BOUND = 3317044064679887385961981
_EXTRA_ROUNDS = 32  # 4**-32 = 2**-64


class FactorizationTooHard(ArithmeticError):
    """A composite cofactor resisted trial division and rho."""

    def __init__(self, cofactor: int):
        super().__init__(f"cannot factor cofactor with {len(str(cofactor))} digits")
        self.cofactor = cofactor


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES: list[int] = []


def small_primes() -> list[int]:
    """Primes below TRIAL_LIMIT, computed on first use."""
    if not _PRIMES:
        _PRIMES.extend(_small_primes(TRIAL_LIMIT))
    return _PRIMES


def integer_nth_root(N: int, n: int) -> int:
    """Largest r with r**n <= N, by bisection on a bit-length bracket."""
    if N < 0 or n < 1:
        raise ValueError("integer_nth_root needs N >= 0 and n >= 1")
    if N < 2 or n == 1:
        return N
    if n == 2:
        return isqrt(N)
    k = (N.bit_length() - 1) // n
    lo, hi = 1 << k, 1 << (k + 1)  # lo**n <= N < hi**n
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if mid**n <= N:
            lo = mid
        else:
            hi = mid
    return lo


def _residues(mod: int) -> frozenset[int]:
    return frozenset(i * i % mod for i in range(mod))


_SQ64 = _residues(64)
_SQ63 = _residues(63)
_SQ65 = _residues(65)
_SQ11 = _residues(11)


def is_perfect_square(N: int) -> int | None:
    """Return the square root of N if N is a perfect square, else None."""
    if N < 0:
        return None
    if (
        (N & 63) not in _SQ64
        or N % 63 not in _SQ63
        or N % 65 not in _SQ65
        or N % 11 not in _SQ11
    ):
        return None
    r = isqrt(N)
    return r if r * r == N else None


def _miller_rabin(N: int, bases: Iterable[int]) -> bool:
    d, s = N - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in bases:
        a %= N
        if a in (0, 1, N - 1):
            continue
        x = pow(a, d, N)
        if x in (1, N - 1):
            continue
        for _ in range(s - 1):
            x = x * x % N
            if x == N - 1:
                break
        else:
            return False
    return True


def is_probable_prime(N: int) -> bool:
    """Miller-Rabin test.

    Deterministic below ``DETERMINISTIC_PRIME_BOUND`` (about 3.3e24). Above it,
    32 extra rounds with bases drawn from a generator seeded by N keep the
    error probability for composites below 2**-64.
    """
    if N < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if N % p == 0:
            return N == p
    if not _miller_rabin(N, _DETERMINISTIC_BASES):
        return False
    if N < DETERMINISTIC_PRIME_BOUND:
        return True
    rng = random.Random(N)
    return _miller_rabin(N, (rng.randrange(2, N - 1) for _ in range(_EXTRA_ROUNDS)))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as a strictly increasing tuple of (prime, exponent)."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            last = p

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> Factorization:
        return cls(tuple(sorted((p, e) for p, e in d.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def divisor_count(self) -> int:
        return prod(e + 1 for _, e in self.factors)

    def __mul__(self, other: Factorization) -> Factorization:
        d = self.as_dict()
        for p, e in other.factors:
            d[p] = d.get(p, 0) + e
        return Factorization.from_dict(d)

    def __pow__(self, k: int) -> Factorization:
        return Factorization(tuple((p, e * k) for p, e in self.factors))

    def __str__(self) -> str:
        return ",".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors) or "1"


def _rho(N: int, rng: random.Random, budget: int) -> int | None:
    """Brent's variant of Pollard rho; returns a nontrivial factor or None."""
    y, c, m = rng.randrange(1, N), rng.randrange(1, N), 128
    g = r = q = 1
    x = ys = y
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % N
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % N
                q = q * abs(x - y) % N
            g = gcd(q, N)
            k += m
        r <<= 1
        spent += r
        if spent > budget:
            return None
    if g == N:
        while True:
            ys = (ys * ys + c) % N
            g = gcd(abs(x - ys), N)
            if g > 1:
                break
    return g if g != N else None


def _split(N: int, rng: random.Random, max_digits: int, out: dict[int, int]) -> None:
    if N == 1:
        return
    if is_probable_prime(N):
        out[N] = out.get(N, 0) + 1
        return
    r = integer_nth_root(N, 2)
    if r * r == N:
        _split(r, rng, max_digits, out)
        _split(r, rng, max_digits, out)
        return
    budget = 1 << 18
    for _ in range(12):
        f = _rho(N, rng, budget)
        if f is not None:
            _split(f, rng, max_digits, out)
            _split(N // f, rng, max_digits, out)
            return
        if len(str(N)) > max_digits:
            break
        budget <<= 1
    raise FactorizationTooHard(N)


def factorize(N: int, max_digits: int = DEFAULT_MAX_DIGITS) -> Factorization:
    """Factor N: trial division below 10**6, then seeded rho, then MR on cofactors.

    Raises FactorizationTooHard when a composite cofactor survives the rho
    budget (immediately once it exceeds ``max_digits`` digits).
    """
    if N < 1:
        raise ValueError("factorize needs N >= 1")
    out: dict[int, int] = {}
    for p in small_primes():
        if p * p > N:
            break
        if N % p == 0:
            e = 0
            while N % p == 0:
                N //= p
                e += 1
            out[p] = e
    if N > 1:
        if N < TRIAL_LIMIT**2:
            out[N] = out.get(N, 0) + 1
        else:
            _split(N, random.Random(N), max_digits, out)
    return Factorization.from_dict(out)


def parse_factors(text: str) -> Factorization:
    """Parse ``p1^e1,p2^e2,...`` (exponent optional) into a Factorization."""
    d: dict[int, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        p, _, e = part.partition("^")
        p_, e_ = int(p), int(e) if e else 1
        if e_ < 1 or not is_probable_prime(p_):
            raise ValueError(f"bad factor {part!r}")
        d[p_] = d.get(p_, 0) + e_
    return Factorization.from_dict(d)


@lru_cache(maxsize=32)
def sorted_divisors(F: Factorization) -> tuple[int, ...]:
    divs = [1]
    for p, e in F.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    return tuple(divs)


def iter_divisors_in_range(F: Factorization, lo: int, hi: int) -> Iterator[int]:
    """Unordered divisors in [lo, hi] by depth-first search with pruning."""
    if lo > hi:
        return
    fs = sorted(F.factors, reverse=True)
    # rest[i] = largest divisor built from fs[i:]
    rest = [1] * (len(fs) + 1)
    for i in range(len(fs) - 1, -1, -1):
        p, e = fs[i]
        rest[i] = rest[i + 1] * p**e

    stack = [(0, 1)]
    while stack:
        i, c = stack.pop()
        if i == len(fs):
            if c >= lo:
                yield c
            continue
        p, e = fs[i]
        tail = rest[i + 1]
        for _ in range(e + 1):
            if c > hi:
                break
            if c * tail >= lo:
                stack.append((i + 1, c))
            c *= p


def divisors_in_range(
    F: Factorization, lo: int, hi: int, strategy: str | None = None
) -> list[int]:
    """Divisors d of F.value with lo <= d <= hi, ascending.

    ``strategy`` is ``"materialize"`` (sorted list + bisection), ``"lazy"``
    (pruned traversal), or None to pick by divisor count.
    """
    if lo > hi:
        return []
    if strategy is None:
        strategy = "materialize" if F.divisor_count() <= MATERIALIZE_LIMIT else "lazy"
    if strategy == "materialize":
        divs = sorted_divisors(F)
        return list(divs[bisect_left(divs, lo) : bisect_right(divs, hi)])
    if strategy == "lazy":
        return sorted(iter_divisors_in_range(F, lo, hi))
    raise ValueError(f"unknown strategy {strategy!r}")
