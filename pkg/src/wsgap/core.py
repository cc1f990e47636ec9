"""Exact integer machinery shared by every other module.

The curves handled by this package have a plane model f(y) = g(x) with
deg f = a, deg g = b and gcd(a, b) = 1, together with rational points
P_1, ..., P_{a+1} such that a*P_1 is equivalent to P_2 + ... + P_{a+1}
and b*P_1 is equivalent to b*P_j for every j.  Semigroup elements at the
first m of those points are plain m-tuples of integers.  This module
provides:

* validated curve parameters (including the norm-trace presets),
* componentwise least upper / greatest lower bounds,
* the rank m-1 translation lattice generated by (0,..,-b,b,..,0) steps,
* canonical reduction into the fundamental region where coordinates
  2..m lie in [0, b), and
* deterministic iteration over integer boxes.

All types are immutable and all functions are pure, so everything here
is safe to use from concurrent callers.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

IntTuple = tuple[int, ...]

# Degrees above this make no sense for desk-scale exact enumeration and
# would only invite accidental huge sweeps.
MAX_DEGREE = 1 << 16


class WsgapError(ValueError):
    """Base class for domain errors raised by this package."""


class NotCoprimeError(WsgapError):
    """The two curve degrees share a nontrivial factor."""


class BadPointCountError(WsgapError):
    """The number of points is outside the range supported by the curve."""


class EmptyInputError(WsgapError):
    """An operation that needs at least one tuple received none."""


class FieldTooSmallWarning(UserWarning):
    """The declared field size is smaller than the number of points."""


@dataclass(frozen=True)
class CurveParams:
    """Degrees (a, b), point count m, genus, and optional field metadata.

    ``genus`` must equal (a-1)(b-1)/2; the constructor checks it so that
    hand-built instances cannot drift from the derived value.
    ``field_size`` is metadata only: the combinatorics below never look
    at it, but several statements assume the field has at least m
    elements, hence the warning when it is declared smaller.
    """

    a: int
    b: int
    m: int
    genus: int
    field_size: int | None = None

    def __post_init__(self) -> None:
        for name in ("a", "b", "m", "genus"):
            if not isinstance(getattr(self, name), int):
                raise WsgapError(f"{name} must be an integer")
        if self.a < 2 or self.b < 2:
            raise WsgapError("degrees a and b must both be at least 2")
        if self.a > MAX_DEGREE or self.b > MAX_DEGREE:
            raise WsgapError(f"degrees above {MAX_DEGREE} are not supported")
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprimeError(f"gcd({self.a}, {self.b}) != 1")
        if not 1 <= self.m <= self.a + 1:
            raise BadPointCountError(
                f"m={self.m} outside [1, a+1]=[1, {self.a + 1}]"
            )
        if self.genus != (self.a - 1) * (self.b - 1) // 2:
            raise WsgapError(
                f"genus must be (a-1)(b-1)/2 = {(self.a - 1) * (self.b - 1) // 2}"
            )
        if self.field_size is not None:
            if not isinstance(self.field_size, int) or self.field_size < 2:
                raise WsgapError("field_size must be an integer >= 2")
            if self.field_size < self.m:
                warnings.warn(
                    f"field_size={self.field_size} < m={self.m}",
                    FieldTooSmallWarning,
                    stacklevel=3,
                )


def curve_params(a: int, b: int, m: int, field_size: int | None = None) -> CurveParams:
    """Validate (a, b, m) and return parameters with the genus filled in."""
    if not isinstance(a, int) or not isinstance(b, int) or not isinstance(m, int):
        raise WsgapError("a, b and m must be integers")
    if a < 2 or b < 2:
        raise WsgapError("degrees a and b must both be at least 2")
    return CurveParams(a=a, b=b, m=m, genus=(a - 1) * (b - 1) // 2,
                       field_size=field_size)


def is_prime_power(n: int) -> bool:
    """True when n = p**k for a prime p and k >= 1."""
    if n < 2:
        return False
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True


def norm_trace_params(ell: int, r: int, m: int) -> CurveParams:
    """Parameters of the norm-trace curve over GF(ell**r) at m points.

    The curve x**((ell**r - 1)/(ell - 1)) = y**(ell**(r-1)) + ... + y has
    a = ell**(r-1), b = (ell**r - 1)/(ell - 1), and lives over a field of
    size ell**r.
    """
    if not isinstance(ell, int) or not is_prime_power(ell):
        raise WsgapError(f"ell={ell} is not a prime power")
    if not isinstance(r, int) or r < 2:
        raise WsgapError("r must be an integer >= 2")
    a = ell ** (r - 1)
    b = (ell**r - 1) // (ell - 1)
    return curve_params(a, b, m, field_size=ell**r)


def hermitian_params(q: int, m: int) -> CurveParams:
    """The Hermitian curve over GF(q**2): the norm-trace curve with r=2."""
    return norm_trace_params(q, 2, m)


def check_tuple(params: CurveParams, t: Sequence[int]) -> IntTuple:
    """Coerce ``t`` to a tuple and check it has m integer coordinates."""
    out = tuple(t)
    if len(out) != params.m:
        raise WsgapError(f"expected a tuple of length m={params.m}, got {out!r}")
    if not all(isinstance(c, int) for c in out):
        raise WsgapError(f"tuple coordinates must be integers, got {out!r}")
    return out


def add(s: IntTuple, t: IntTuple) -> IntTuple:
    return tuple(x + y for x, y in zip(s, t, strict=True))


def sub(s: IntTuple, t: IntTuple) -> IntTuple:
    return tuple(x - y for x, y in zip(s, t, strict=True))


def lub(ts: Sequence[IntTuple]) -> IntTuple:
    """Componentwise maximum of a nonempty family of equal-length tuples."""
    if not ts:
        raise EmptyInputError("lub of an empty family")
    n = len(ts[0])
    if any(len(t) != n for t in ts):
        raise WsgapError("lub over tuples of mixed lengths")
    return tuple(max(t[k] for t in ts) for k in range(n))


def glb(ts: Sequence[IntTuple]) -> IntTuple:
    """Componentwise minimum of a nonempty family of equal-length tuples."""
    if not ts:
        raise EmptyInputError("glb of an empty family")
    n = len(ts[0])
    if any(len(t) != n for t in ts):
        raise WsgapError("glb over tuples of mixed lengths")
    return tuple(min(t[k] for t in ts) for k in range(n))


@dataclass(frozen=True)
class ThetaBasis:
    """Generators of the translation lattice attached to the points.

    Generator i (for i = 2..m) carries -b at coordinate i-1 and +b at
    coordinate i, so every lattice element has all coordinates divisible
    by b and coordinate sum zero.
    """

    params: CurveParams
    generators: tuple[IntTuple, ...]


def theta_basis(params: CurveParams) -> ThetaBasis:
    """The m-1 lattice generators; requires at least two points."""
    if params.m < 2:
        raise BadPointCountError("the translation lattice needs m >= 2")
    b, m = params.b, params.m
    gens = []
    for i in range(2, m + 1):
        v = [0] * m
        v[i - 2] = -b
        v[i - 1] = b
        gens.append(tuple(v))
    return ThetaBasis(params=params, generators=tuple(gens))


def theta_vector(params: CurveParams, d: Sequence[int]) -> IntTuple:
    """Lattice element (-b*sum(d), b*d_2, ..., b*d_m) for shifts d.

    Every lattice element arises this way for exactly one d, which is a
    more convenient coordinate system than the raw generator basis.
    """
    if params.m < 2:
        raise BadPointCountError("the translation lattice needs m >= 2")
    if len(d) != params.m - 1:
        raise WsgapError(f"expected {params.m - 1} shift entries, got {len(d)}")
    b = params.b
    return tuple([-b * sum(d)] + [b * dj for dj in d])


def reduce_to_region(params: CurveParams, alpha: Sequence[int]) -> tuple[IntTuple, IntTuple]:
    """Reduce ``alpha`` modulo the lattice into the fundamental region.

    Returns ``(rep, d)`` where ``rep`` has coordinates 2..m in [0, b),
    ``d`` lists the number of +b shifts applied to each of those
    coordinates, and ``rep == add(alpha, theta_vector(params, d))``.
    Coordinate 1 absorbs the compensating shift, so the coordinate sum
    is preserved and the representative is unique.
    """
    if params.m < 2:
        raise BadPointCountError("region reduction needs m >= 2")
    alpha = check_tuple(params, alpha)
    b = params.b
    quots = [c // b for c in alpha[1:]]
    rep = tuple([alpha[0] + b * sum(quots)] + [c - b * q for c, q in zip(alpha[1:], quots)])
    d = tuple(-q for q in quots)
    return rep, d


def in_region(params: CurveParams, t: Sequence[int]) -> bool:
    """True when coordinates 2..m of ``t`` already lie in [0, b)."""
    t = check_tuple(params, t)
    return all(0 <= c < params.b for c in t[1:])


@dataclass(frozen=True)
class Box:
    """Componentwise-inclusive integer box lo <= x <= hi."""

    lo: IntTuple
    hi: IntTuple

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise WsgapError("box bounds of different lengths")
        if not self.lo:
            raise EmptyInputError("zero-dimensional box")
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise WsgapError(f"box lower bound exceeds upper bound: {self}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def cell_count(self) -> int:
        return math.prod(h - l + 1 for l, h in zip(self.lo, self.hi))

    def __contains__(self, t: object) -> bool:
        if not isinstance(t, tuple) or len(t) != self.dim:
            return False
        return all(l <= c <= h for l, c, h in zip(self.lo, t, self.hi))


def box_tuples(box: Box) -> Iterator[IntTuple]:
    """Every lattice point of the box exactly once, in lexicographic order."""
    return itertools.product(*(range(l, h + 1) for l, h in zip(box.lo, box.hi)))


def ceil_div(p: int, q: int) -> int:
    """Ceiling of p/q for positive q."""
    return -((-p) // q)


def sorted_unique(ts: Iterable[IntTuple]) -> tuple[IntTuple, ...]:
    """Canonical form for returned sets: sorted and duplicate-free."""
    return tuple(sorted(set(ts)))
