"""Cubic-multiplier search for numbers with one more two-cube representation.

Given a k-way number T with medians m_1..m_k, every N = M^3 * T keeps the
lifted medians M*m_i. The step looks for further medians among the divisors
of N inside the median bounds, split as (divisor of M^3 * chain^3) times
(divisor of the seed), which is exactly the divisor set of N.
"""

from __future__ import annotations

import os
import tempfile
from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Callable

from .arith import (
    MATERIALIZE_LIMIT,
    Factorization,
    factorize,
    integer_nth_root,
    is_probable_prime,
    iter_divisors_in_range,
    sorted_divisors,
)
from .cubeform import decompose, median_bounds, solve_h


class InvalidSeed(ValueError):
    pass


class CheckpointMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TaxicabRecord:
    """A number with ``ways`` two-power representations, built as chain^n * seed."""

    value: int
    power: int
    ways: int
    medians: tuple[int, ...]
    factorization: Factorization
    seed_label: str = ""
    seed_value: int = 0
    chain: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.seed_value:
            object.__setattr__(self, "seed_value", self.value)

    @property
    def seed_factorization(self) -> Factorization:
        chain = Factorization()
        for mu in self.chain:
            chain = chain * factorize(mu)
        removed = chain.as_dict()
        return Factorization.from_dict(
            {p: e - removed.get(p, 0) * self.power for p, e in self.factorization.factors}
        )

    def validate(self) -> None:
        """Raise InvalidSeed unless every record invariant holds."""
        n, N = self.power, self.value
        if self.factorization.value != N:
            raise InvalidSeed("factorization does not match value")
        if prod(self.chain) ** n * self.seed_value != N:
            raise InvalidSeed("chain^n * seed != value")
        if N % 2:
            raise InvalidSeed("medians need an even value")
        if len(self.medians) != self.ways or list(self.medians) != sorted(set(self.medians)):
            raise InvalidSeed("medians must be strictly ascending, one per way")
        bounds = median_bounds(N, n)
        for m in self.medians:
            if bounds is None or not bounds[0] <= m <= bounds[1]:
                raise InvalidSeed(f"median {m} outside the median bounds")
            if solve_h(N, m, n) is None:
                raise InvalidSeed(f"{m} is not a median of {N}")
            if (m - self.medians[0]) % n:
                raise InvalidSeed("medians are not congruent mod n")

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for m in self.medians:
            h = solve_h(self.value, m, self.power)
            out.append((m - h, m + h))
        return sorted(out)


def record_from_value(
    value: int,
    power: int = 3,
    factorization: Factorization | None = None,
    label: str = "",
) -> TaxicabRecord:
    """Build a seed record by full decomposition of an even value."""
    F = factorization or factorize(value)
    decs = decompose(value, power, F)
    medians = tuple(sorted(d.m for d in decs))
    return TaxicabRecord(value, power, len(medians), medians, F, label, value, ())


def max_multiplier_bound(T: TaxicabRecord) -> int:
    """Cap on useful multipliers, 2 * floor(cbrt(T^2)) (not floor(2 * T^(2/3)))."""
    return 2 * integer_nth_root(T.value**2, 3)


LOWER_BOUND_DIGITS = 40


def taxicab_lower_bound(n: int, k: int) -> int:
    """Certified floor of 2 * (2n / (2 - 2^(1/n)))^n * (k - 1)^n.

    2^(1/n) is replaced by a rational lower bound accurate to 40 digits; the
    expression decreases as the root decreases, so the result never exceeds
    the true bound.
    """
    if n < 3 or n % 2 == 0 or k < 2:
        raise ValueError("need odd n >= 3 and k >= 2")
    scale = 10**LOWER_BOUND_DIGITS
    root_lo = Fraction(integer_nth_root(2 * scale**n, n), scale)
    value = 2 * (Fraction(2 * n) / (2 - root_lo)) ** n * (k - 1) ** n
    return value.numerator // value.denominator


def median_lcm_check(T: TaxicabRecord) -> bool:
    return lcm(*T.medians) <= (2 * T.medians[0]) ** T.power


def _residue_classes(divs: tuple[int, ...]) -> list[list[int]]:
    classes: list[list[int]] = [[], [], []]
    for d in divs:
        classes[d % 3].append(d)
    return classes


_CLASS_CACHE: dict[Factorization, list[list[int]]] = {}


def _seed_classes(F: Factorization) -> list[list[int]]:
    if F not in _CLASS_CACHE:
        if len(_CLASS_CACHE) > 8:
            _CLASS_CACHE.clear()
        _CLASS_CACHE[F] = _residue_classes(sorted_divisors(F))
    return _CLASS_CACHE[F]


def candidate_medians(T: TaxicabRecord, M: int, split: bool | None = None) -> set[int]:
    """Divisors of M^3 * T inside the median bounds that pass the mod-3 test.

    With ``split`` false the inner array is all divisors of T (outer loop over
    divisors of M^3); with ``split`` true it is the seed's divisors and the
    outer loop covers M^3 * chain^3. None picks by divisor count.
    """
    N = M**3 * T.value
    bounds = median_bounds(N, 3)
    if bounds is None:
        return set()
    lo, hi = bounds
    target = (N >> 1) % 3
    if split is None:
        split = T.factorization.divisor_count() > MATERIALIZE_LIMIT
    if split:
        inner = T.seed_factorization
        outer = factorize(M) ** 3
        for mu in T.chain:
            outer = outer * factorize(mu) ** 3
    else:
        inner = T.factorization
        outer = factorize(M) ** 3
    if inner.divisor_count() > MATERIALIZE_LIMIT:
        raise InvalidSeed("seed has too many divisors to materialize")
    classes = _seed_classes(inner)

    found: set[int] = set()
    for a in iter_divisors_in_range(outer, 1, hi):
        ar = a % 3
        if ar == 0:
            if target:
                continue
            pools = classes
        else:
            # a*d = target (mod 3) fixes the class of d
            pools = [classes[target * ar % 3]]
        dlo = -(-lo // a)
        dhi = hi // a
        for pool in pools:
            i = bisect_left(pool, dlo)
            j = bisect_right(pool, dhi, i)
            found.update(a * d for d in pool[i:j])
    return found


def search_step(T: TaxicabRecord, M: int, split: bool | None = None) -> TaxicabRecord | None:
    """Try N = M^3 * T; return the richer record if N gains representations."""
    if T.power != 3:
        raise InvalidSeed("the multiplier search is wired for cubes only")
    if M < 2:
        raise ValueError("multiplier must be >= 2")
    N = M**3 * T.value
    medians = sorted(c for c in candidate_medians(T, M, split) if solve_h(N, c, 3) is not None)
    if len(medians) <= T.ways:
        return None
    lifted = {M * m for m in T.medians}
    assert lifted.issubset(medians), "lifted medians lost"
    return TaxicabRecord(
        N,
        3,
        len(medians),
        tuple(medians),
        T.factorization * factorize(M) ** 3,
        T.seed_label,
        T.seed_value,
        T.chain + (M,),
    )


def extend_record(T: TaxicabRecord, M: int, new_medians: list[int]) -> TaxicabRecord:
    """Rebuild the step result for M from the medians it added; validates them."""
    N = M**3 * T.value
    medians = sorted({M * m for m in T.medians} | set(new_medians))
    rec = TaxicabRecord(
        N, 3, len(medians), tuple(medians), T.factorization * factorize(M) ** 3,
        T.seed_label, T.seed_value, T.chain + (M,),
    )
    rec.validate()
    return rec


@dataclass
class SearchCheckpoint:
    seed_value: int
    power: int
    next_multiplier: int
    found: list[tuple[int, int]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"seed={self.seed_value}",
            f"power={self.power}",
            f"next_multiplier={self.next_multiplier}",
        ]
        lines += [f"found {M} {m}" for M, m in self.found]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SearchCheckpoint:
        lines = text.splitlines()
        try:
            keys = [line.split("=", 1) for line in lines[:3]]
            if [k for k, _ in keys] != ["seed", "power", "next_multiplier"]:
                raise ValueError
            found = []
            for line in lines[3:]:
                tag, M, m = line.split()
                if tag != "found":
                    raise ValueError
                found.append((int(M), int(m)))
            cp = cls(int(keys[0][1]), int(keys[1][1]), int(keys[2][1]), found)
        except ValueError as exc:
            raise ValueError("malformed checkpoint") from exc
        if cp.next_multiplier < 2:
            raise ValueError("checkpoint next_multiplier must be >= 2")
        return cp

    def save(self, path: str | os.PathLike) -> None:
        """Write atomically: temp file in the same directory, then rename."""
        path = os.fspath(path)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", prefix=".ckpt")
        try:
            with os.fdopen(fd, "w") as f:
                f.write(self.to_text())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str | os.PathLike) -> SearchCheckpoint:
        with open(path) as f:
            return cls.from_text(f.read())


_WORKER_RECORD: TaxicabRecord | None = None


def _init_worker(T: TaxicabRecord) -> None:
    global _WORKER_RECORD
    _WORKER_RECORD = T


def _worker_step(M: int) -> TaxicabRecord | None:
    return search_step(_WORKER_RECORD, M)


def _multipliers(start: int, stop: int, prime_only: bool) -> list[int]:
    return [M for M in range(start, stop + 1) if not prime_only or is_probable_prime(M)]


def search_range(
    T: TaxicabRecord,
    start: int,
    stop: int,
    checkpoint: SearchCheckpoint | None = None,
    prime_only: bool = False,
    workers: int = 1,
    checkpoint_path: str | os.PathLike | None = None,
    on_result: Callable[[int, TaxicabRecord | None], None] | None = None,
) -> list[tuple[int, TaxicabRecord]]:
    """All multipliers in [start, stop] whose step succeeds, ascending.

    The checkpoint (if any) advances after every multiplier in ascending
    order, whatever the worker count, and is saved to ``checkpoint_path``
    each time. Hits recorded in a resumed checkpoint are rebuilt, not rerun.
    ``on_result`` sees restored hits first, then every completed multiplier;
    an exception raised there interrupts the search with the checkpoint
    consistent.
    """
    if not 2 <= start <= stop <= max_multiplier_bound(T):
        raise ValueError("multiplier range outside [2, max_multiplier_bound]")
    T.validate()
    results: list[tuple[int, TaxicabRecord]] = []
    if checkpoint is None:
        checkpoint = SearchCheckpoint(T.value, T.power, start)
    elif checkpoint.seed_value != T.value or checkpoint.power != T.power:
        raise CheckpointMismatch("checkpoint belongs to a different seed")
    else:
        by_multiplier: dict[int, list[int]] = {}
        for M, m in checkpoint.found:
            by_multiplier.setdefault(M, []).append(m)
        for M in sorted(by_multiplier):
            if start <= M <= stop:
                rec = extend_record(T, M, by_multiplier[M])
                results.append((M, rec))
                if on_result is not None:
                    on_result(M, rec)
        start = max(start, checkpoint.next_multiplier)

    todo = _multipliers(start, stop, prime_only)

    def record(M: int, rec: TaxicabRecord | None) -> None:
        if rec is not None:
            results.append((M, rec))
            lifted = {M * m for m in T.medians}
            checkpoint.found.extend((M, m) for m in rec.medians if m not in lifted)
        checkpoint.next_multiplier = M + 1
        if checkpoint_path is not None:
            checkpoint.save(checkpoint_path)
        if on_result is not None:
            on_result(M, rec)

    if workers <= 1 or len(todo) < 2:
        for M in todo:
            record(M, search_step(T, M))
    else:
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(T,)) as pool:
            for M, rec in zip(todo, pool.map(_worker_step, todo)):
                record(M, rec)
    if not todo and start <= stop:
        checkpoint.next_multiplier = max(checkpoint.next_multiplier, stop + 1)
    return results
