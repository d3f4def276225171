"""Parametric families of two-cube (and one quintic) identities, checked exactly.

Rational sides use ``fractions.Fraction``; the quintic family needs exact
Gaussian integers, provided by ``GaussianInteger``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Union


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int = 0

    def __add__(self, other: GaussianInteger | int) -> GaussianInteger:
        o = _gauss(other)
        return GaussianInteger(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __sub__(self, other: GaussianInteger | int) -> GaussianInteger:
        return self + (-_gauss(other))

    def __mul__(self, other: GaussianInteger | int) -> GaussianInteger:
        o = _gauss(other)
        return GaussianInteger(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussianInteger:
        if k < 0:
            raise ValueError("negative powers leave the Gaussian integers")
        result, base = GaussianInteger(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


def _gauss(z: GaussianInteger | int) -> GaussianInteger:
    return z if isinstance(z, GaussianInteger) else GaussianInteger(z)


Side = Union[Fraction, GaussianInteger, int]


class UnknownIdentity(KeyError):
    pass


class Degenerate(ZeroDivisionError):
    """A denominator of the parametrization vanished."""


def _q(num: int, den: int) -> Fraction:
    if den == 0:
        raise Degenerate
    return Fraction(num, den)


def gerardin_triple(t: int, s: int) -> tuple[int, int, int]:
    """(u, v, w) with u^2 + 3v^2 = w^3."""
    u, v, w = t**3 - 9 * t * s**2, 3 * t**2 * s - 3 * s**3, t**2 + 3 * s**2
    assert u * u + 3 * v * v == w**3
    return u, v, w


def euler_equal_sums(u: int, v: int, w: int) -> tuple[int, int, int, int]:
    """(X, Y, S, T) with X^3 + Y^3 = S^3 + T^3."""
    r = u * u + 3 * v * v
    X = w * (1 - (u - 3 * v) * r)
    Y = w * ((u + 3 * v) * r - 1)
    S = w * ((u + 3 * v) - r * r)
    T = w * (r * r + (3 * v - u))
    assert X**3 + Y**3 == S**3 + T**3
    return X, Y, S, T


def _quintic_closed_form(t: int, s: int) -> int:
    return (
        -8
        * (t * t + s * s)
        * (t**4 - 2 * t**3 * s - 6 * t * t * s * s + 2 * t * s**3 + s**4)
        * (t**4 + 2 * t**3 * s - 6 * t * t * s * s - 2 * t * s**3 + s**4)
    )


def gaussian_quintic(t: int, s: int):
    """Two conjugate pairs with equal fifth-power sums, and that (real) sum."""
    a = t * t + s * s
    b = t * t - 2 * t * s - s * s
    c = t * t + 2 * t * s - s * s
    first = (GaussianInteger(a, -b), GaussianInteger(a, b))
    second = (GaussianInteger(a, -c), GaussianInteger(a, c))
    value = _quintic_closed_form(t, s)
    for z1, z2 in (first, second):
        assert z1**5 + z2**5 == GaussianInteger(value)
    return (first, second), value


# Each entry maps params to (lhs, rhs); Degenerate propagates for zero denominators.


def _gerardin_square(t, s):
    u, v, w = t**3 - 9 * t * s**2, 3 * t**2 * s - 3 * s**3, t**2 + 3 * s**2
    return u * u + 3 * v * v, w**3


def _two_cubes_sum(t, s):
    a = t**3 - 3 * t**2 * s - 9 * t * s**2 + 3 * s**3
    b = t**3 + 3 * t**2 * s - 9 * t * s**2 - 3 * s**3
    return a**3 + b**3, 2 * (t**3 - 9 * t * s**2) * (t**2 + 3 * s**2) ** 3


def _two_cubes_2t(t, s):
    den = t**2 + 3 * s**2
    a = _q(t**3 - 3 * t**2 * s - 9 * t * s**2 + 3 * s**3, den)
    b = _q(t**3 + 3 * t**2 * s - 9 * t * s**2 - 3 * s**3, den)
    return a**3 + b**3, Fraction(2 * t * (t - 3 * s) * (t + 3 * s))


def _w_form_1(w):
    den = 3 * (w * w - w + 1)
    a = _q(w**3 + 3 * w**2 - 6 * w + 1, den)
    b = _q(w**3 - 6 * w**2 + 3 * w + 1, den)
    return a**3 - b**3, Fraction(w * (w - 1))


def _w_form_2_plus(w):
    den = 3 * w * (4 * w**6 + 2 * w**3 + 1)
    a = _q(8 * w**9 + 24 * w**6 + 6 * w**3 - 1, den)
    b = _q(8 * w**9 - 12 * w**6 - 12 * w**3 - 1, den)
    return a**3 - b**3, Fraction(4 * w**3 + 2)


def _w_form_2_minus(w):
    den = 3 * w * (4 * w**6 - 2 * w**3 + 1)
    a = _q(8 * w**9 - 24 * w**6 + 6 * w**3 + 1, den)
    b = _q(8 * w**9 + 12 * w**6 - 12 * w**3 + 1, den)
    return -(a**3) + b**3, Fraction(4 * w**3 - 2)


def _uv_sum(u, v):
    den = 3 * (u * u + u * v + v * v)
    a = _q(u**3 + 6 * u**2 * v + 3 * u * v**2 - v**3, den)
    b = _q(v**3 + 6 * v**2 * u + 3 * v * u**2 - u**3, den)
    return a**3 + b**3, Fraction(u * v * (u + v))


def _pq_sum(p, q):
    den = 3 * p * q * (p**6 + p**3 * q**3 + q**6)
    a = _q(p**9 + 6 * p**6 * q**3 + 3 * p**3 * q**6 - q**9, den)
    b = _q(q**9 + 6 * q**6 * p**3 + 3 * q**3 * p**6 - p**9, den)
    return a**3 + b**3, Fraction(p**3 + q**3)


def _catalan_square(t, s):
    a = Fraction((t + s) * (t - 2 * s) * (s - 2 * t), 2)
    b = Fraction(3 * t * s * (t - s), 2)
    return a * a + 3 * b * b, Fraction((t * t - t * s + s * s) ** 3)


def _catalan_cubes(t, s):
    den = t * t - t * s + s * s
    a = _q(t**3 - 3 * t**2 * s + s**3, den)
    b = _q(t**3 - 3 * t * s**2 + s**3, den)
    return a**3 + b**3, Fraction((t + s) * (2 * s - t) * (s - 2 * t))


def _uv_diff(u, v):
    den = 3 * (u * u - u * v + v * v)
    a = _q(u**3 + 3 * u**2 * v - 6 * u * v**2 + v**3, den)
    b = _q(u**3 - 6 * u**2 * v + 3 * u * v**2 + v**3, den)
    return a**3 - b**3, Fraction(u * v * (u - v))


def _pq_diff(p, q):
    den = 3 * p * q * (p**6 - p**3 * q**3 + q**6)
    a = _q(p**9 + 3 * p**6 * q**3 - 6 * p**3 * q**6 + q**9, den)
    b = _q(p**9 - 6 * p**6 * q**3 + 3 * p**3 * q**6 + q**9, den)
    return a**3 - b**3, Fraction(p**3 - q**3)


def _euler_four_cubes(u, v, w):
    r = u * u + 3 * v * v
    X, Y = w * (1 - (u - 3 * v) * r), w * ((u + 3 * v) * r - 1)
    S, T = w * ((u + 3 * v) - r * r), w * (r * r + (3 * v - u))
    return X**3 + Y**3, S**3 + T**3


def _gaussian_quintic(t, s):
    a = t * t + s * s
    b = t * t - 2 * t * s - s * s
    c = t * t + 2 * t * s - s * s
    lhs = GaussianInteger(a, -b) ** 5 + GaussianInteger(a, b) ** 5
    mid = GaussianInteger(a, -c) ** 5 + GaussianInteger(a, c) ** 5
    if lhs != mid:  # the two pairs disagree; report that mismatch
        return lhs, mid
    return lhs, GaussianInteger(_quintic_closed_form(t, s))


CATALOG: dict[str, tuple[int, Callable[..., tuple[Side, Side]]]] = {
    "gerardin-square": (2, _gerardin_square),
    "two-cubes-sum": (2, _two_cubes_sum),
    "two-cubes-2t": (2, _two_cubes_2t),
    "w-form-1": (1, _w_form_1),
    "w-form-2-plus": (1, _w_form_2_plus),
    "w-form-2-minus": (1, _w_form_2_minus),
    "uv-sum": (2, _uv_sum),
    "pq-sum": (2, _pq_sum),
    "catalan-square": (2, _catalan_square),
    "catalan-cubes": (2, _catalan_cubes),
    "uv-diff": (2, _uv_diff),
    "pq-diff": (2, _pq_diff),
    "euler-four-cubes": (3, _euler_four_cubes),
    "gaussian-quintic": (2, _gaussian_quintic),
}


@dataclass(frozen=True)
class IdentityCase:
    name: str
    params: tuple[int, ...]
    lhs: Side | None
    rhs: Side | None
    degenerate: bool

    @property
    def holds(self) -> bool:
        return self.degenerate or self.lhs == self.rhs


def check_identity(name: str, params: tuple[int, ...]) -> IdentityCase:
    """Evaluate both sides of a catalog identity exactly at ``params``.

    Vanishing denominators yield a degenerate case rather than an error.
    Inspect ``holds``: a False there means the identity failed.
    """
    try:
        arity, fn = CATALOG[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    params = tuple(params)
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameters, got {len(params)}")
    try:
        lhs, rhs = fn(*params)
    except Degenerate:
        return IdentityCase(name, params, None, None, True)
    return IdentityCase(name, params, lhs, rhs, False)


def sweep(name: str, radius: int) -> list[IdentityCase]:
    """Check ``name`` at every integer point of the box |param| <= radius."""
    arity = CATALOG[name][0] if name in CATALOG else None
    if arity is None:
        raise UnknownIdentity(name)
    box = range(-radius, radius + 1)
    return [check_identity(name, params) for params in product(box, repeat=arity)]


def solvability_bridge(t: int, s: int, r: int) -> tuple[int, Fraction, Fraction] | None:
    """If 2t^3 - 18ts^2 = +-N r^3 for a natural N, return N and two rationals
    whose cubes sum to N; otherwise None."""
    if r == 0:
        return None
    lhs = 2 * t**3 - 18 * t * s**2
    r3 = r**3
    if lhs == 0 or lhs % r3:
        return None
    signed_n = lhs // r3  # N or -N
    den = t * t + 3 * s * s
    a = Fraction(t**3 - 3 * t**2 * s - 9 * t * s**2 + 3 * s**3, den * r)
    b = Fraction(t**3 + 3 * t**2 * s - 9 * t * s**2 - 3 * s**3, den * r)
    if signed_n < 0:
        a, b = -a, -b
    return abs(signed_n), a, b
