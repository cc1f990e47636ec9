"""Closed-form families of absolute and relative maximal elements.

Inside the fundamental region the two families are given by explicit
formulas in (a, b, m, i):

* absolute:  (a(b-i) - b(m-1), i, ..., i) for i = 1..b-1, plus the zero
  tuple;
* relative:  (b(m-2), 0, ..., 0) plus (a(b-i) - b, i, ..., i) for
  i = 1..b-1.

Each family has exactly b representatives, and the full (infinite)
families are the representatives translated by the lattice.  This module
generates the representatives and expands them into boxes, into the
nonnegative orthant, or into the strictly positive orthant.  For m = 2
the two families coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .core import (
    Box,
    BadPointCountError,
    CurveParams,
    IntTuple,
    ThetaBasis,
    ceil_div,
    check_tuple,
    in_region,
    reduce_to_region,
    sorted_unique,
    theta_basis,
)

MaximalKind = Literal["absolute", "relative"]


@dataclass(frozen=True)
class MaximalSet:
    """A maximal-element family: region representatives plus the lattice."""

    kind: MaximalKind
    region_reps: tuple[IntTuple, ...]
    theta: ThetaBasis
    params: CurveParams

    def __post_init__(self) -> None:
        assert len(self.region_reps) == self.params.b
        assert all(in_region(self.params, r) for r in self.region_reps)


@lru_cache(maxsize=None)
def absolute_maximals_region(params: CurveParams) -> MaximalSet:
    """The b absolute-maximal representatives in the fundamental region."""
    if params.m < 2:
        raise BadPointCountError("maximal families need m >= 2")
    a, b, m = params.a, params.b, params.m
    reps = [(0,) * m]
    for i in range(1, b):
        reps.append(tuple([a * (b - i) - b * (m - 1)] + [i] * (m - 1)))
    return MaximalSet(kind="absolute", region_reps=sorted_unique(reps),
                      theta=theta_basis(params), params=params)


@lru_cache(maxsize=None)
def relative_maximals_region(params: CurveParams) -> MaximalSet:
    """The b relative-maximal representatives in the fundamental region."""
    if params.m < 2:
        raise BadPointCountError("maximal families need m >= 2")
    a, b, m = params.a, params.b, params.m
    reps = [tuple([b * (m - 2)] + [0] * (m - 1))]
    for i in range(1, b):
        reps.append(tuple([a * (b - i) - b] + [i] * (m - 1)))
    return MaximalSet(kind="relative", region_reps=sorted_unique(reps),
                      theta=theta_basis(params), params=params)


def _translates_in_box(params: CurveParams, rep: IntTuple, box: Box) -> Iterator[IntTuple]:
    """All lattice translates of ``rep`` inside ``box``.

    Coordinates 2..m pin each shift d_j to a finite interval and the
    first coordinate pins sum(d), so the enumeration is complete.
    """
    b, m = params.b, params.m
    ranges = []
    for j in range(1, m):
        lo_d = ceil_div(box.lo[j] - rep[j], b)
        hi_d = (box.hi[j] - rep[j]) // b
        if lo_d > hi_d:
            return
        ranges.append(range(lo_d, hi_d + 1))
    sum_lo = ceil_div(rep[0] - box.hi[0], b)
    sum_hi = (rep[0] - box.lo[0]) // b
    if sum_lo > sum_hi:
        return
    for d in itertools.product(*ranges):
        s = sum(d)
        if sum_lo <= s <= sum_hi:
            yield tuple([rep[0] - b * s] + [rep[j + 1] + b * d[j] for j in range(m - 1)])


def expand_in_box(ms: MaximalSet, box: Box) -> tuple[IntTuple, ...]:
    """Every element of the family lying in ``box``, sorted."""
    params = ms.params
    if box.dim != params.m:
        raise ValueError(f"box dimension {box.dim} != m={params.m}")
    out: list[IntTuple] = []
    for rep in ms.region_reps:
        out.extend(_translates_in_box(params, rep, box))
    return sorted_unique(out)


def _translates_above(params: CurveParams, rep: IntTuple, floor: int) -> Iterator[IntTuple]:
    """All lattice translates of ``rep`` with every coordinate >= floor."""
    b, m = params.b, params.m
    lo = [ceil_div(floor - rep[j], b) for j in range(1, m)]
    cap = (rep[0] - floor) // b  # sum(d) <= cap keeps coordinate 1 >= floor
    if sum(lo) > cap:
        return

    def rec(j: int, prefix: list[int], remaining: int) -> Iterator[IntTuple]:
        if j == m - 1:
            s = sum(prefix)
            yield tuple([rep[0] - b * s] + [rep[k + 1] + b * prefix[k] for k in range(m - 1)])
            return
        tail_min = sum(lo[j + 1:])
        for dj in range(lo[j], remaining - tail_min + 1):
            yield from rec(j + 1, prefix + [dj], remaining - dj)

    yield from rec(0, [], cap)


def expand_nonneg(ms: MaximalSet) -> tuple[IntTuple, ...]:
    """Every element of the family with all coordinates >= 0, sorted."""
    out: list[IntTuple] = []
    for rep in ms.region_reps:
        out.extend(_translates_above(ms.params, rep, 0))
    return sorted_unique(out)


def expand_positive(ms: MaximalSet) -> tuple[IntTuple, ...]:
    """Every element of the family with all coordinates >= 1, sorted."""
    out: list[IntTuple] = []
    for rep in ms.region_reps:
        out.extend(_translates_above(ms.params, rep, 1))
    return sorted_unique(out)


def _shift_vectors_sum_at_most(parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of the given length with sum <= cap."""
    if cap < 0:
        return

    def rec(k: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield prefix
            return
        for v in range(remaining + 1):
            yield from rec(k - 1, remaining - v, prefix + (v,))

    yield from rec(parts, cap, ())


@lru_cache(maxsize=None)
def lambda_nonneg(params: CurveParams, include_zero_family: bool = False) -> tuple[IntTuple, ...]:
    """Relative maximal elements by the explicit nonnegative formula.

    Yields (a(b-i) - b - b*sum(d), i + b*d_2, ..., i + b*d_m) over
    i = 1..b-1 and shift vectors d >= 0 that keep the first coordinate
    nonnegative.  With ``include_zero_family`` the translates of
    (b(m-2), 0, ..., 0) with all coordinates nonnegative are added; the
    plain formula omits them, and the gap and pure-gap sets downstream
    are the same either way because those translates always leave some
    coordinate at zero.
    """
    if params.m < 2:
        raise BadPointCountError("maximal families need m >= 2")
    a, b, m = params.a, params.b, params.m
    out: list[IntTuple] = []
    for i in range(1, b):
        cap = (a * (b - i) - b) // b
        for d in _shift_vectors_sum_at_most(m - 1, cap):
            first = a * (b - i) - b * (1 + sum(d))
            assert first >= 0
            out.append(tuple([first] + [i + b * dj for dj in d]))
    if include_zero_family:
        for d in _shift_vectors_sum_at_most(m - 1, m - 2):
            out.append(tuple([b * (m - 2) - b * sum(d)] + [b * dj for dj in d]))
    return sorted_unique(out)


def family_contains(ms: MaximalSet, t: IntTuple) -> bool:
    """Whether ``t`` is a lattice translate of one of the representatives."""
    t = check_tuple(ms.params, t)
    rep, _ = reduce_to_region(ms.params, t)
    return rep in ms.region_reps
