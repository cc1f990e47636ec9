"""Membership and dimension oracle for the generalized semigroup.

Everything in this module reduces to one question about the absolute
maximal elements below a target tuple beta: what is the componentwise
maximum of {gamma <= beta : gamma absolute maximal}?  Membership holds
exactly when that maximum equals beta in every coordinate, the dimension
of the space attached to beta counts the distinct first coordinates of
the same finite set, and emptiness of the sets nabla_J(alpha) comes down
to the same profile evaluated at a perturbed target.

For a translate family rep + lattice, the constraints gamma_j <= beta_j
(j >= 2) cap each shift d_j above at U_j = floor((beta_j - rep_j)/b) and
gamma_1 <= beta_1 forces sum(d) >= smin = ceil((rep_1 - beta_1)/b), so
the family contributes iff sum(U) >= smin.  Within a feasible family the
extremes are attained in closed form, and because the first coordinates
of distinct representatives fall in distinct residue classes mod b, the
families never collide; the profile and the dimension count follow from
b window computations without enumerating anything.  The explicit
enumeration is kept (``local_absolute_maximals``) and is cross-checked
against the window arithmetic by the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

from .core import (
    BadPointCountError,
    CurveParams,
    IntTuple,
    WsgapError,
    ceil_div,
    check_tuple,
    sorted_unique,
)
from .maximals import absolute_maximals_region

NablaMethod = Literal["search", "profile"]


@dataclass(frozen=True)
class LocalProfile:
    """The finite set of absolute maximals below ``beta`` and its envelope."""

    beta: IntTuple
    gamma_hat_beta: tuple[IntTuple, ...]
    per_coord_max: tuple[int | None, ...]


@lru_cache(maxsize=None)
def _region_reps(params: CurveParams) -> tuple[IntTuple, ...]:
    return absolute_maximals_region(params).region_reps


def _windows(params: CurveParams, beta: IntTuple):
    """Feasible (rep, smin, U) windows of the translate families under beta."""
    b, m = params.b, params.m
    out = []
    for rep in _region_reps(params):
        U = [(beta[j] - rep[j]) // b for j in range(1, m)]
        smin = ceil_div(rep[0] - beta[0], b)
        if sum(U) >= smin:
            out.append((rep, smin, U))
    return out


@lru_cache(maxsize=1 << 18)
def _per_coord_max(params: CurveParams, beta: IntTuple) -> tuple[int, ...] | None:
    b, m = params.b, params.m
    best: list[int] | None = None
    for rep, smin, U in _windows(params, beta):
        cand = [rep[0] - b * smin] + [rep[j + 1] + b * U[j] for j in range(m - 1)]
        if best is None:
            best = cand
        else:
            best = [max(x, y) for x, y in zip(best, cand)]
    return None if best is None else tuple(best)


def per_coord_max(params: CurveParams, beta: Sequence[int]) -> tuple[int, ...] | None:
    """Componentwise maximum over the absolute maximals <= beta, or None."""
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    return _per_coord_max(params, check_tuple(params, beta))


def local_absolute_maximals(params: CurveParams, beta: Sequence[int]) -> LocalProfile:
    """Explicit enumeration of every absolute maximal element <= beta."""
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    beta = check_tuple(params, beta)
    b, m = params.b, params.m
    found: list[IntTuple] = []
    for rep, smin, U in _windows(params, beta):
        # d_j <= U_j and sum(d) >= smin bound each d_j below as well.
        lo = [smin - (sum(U) - U[j]) for j in range(m - 1)]
        for d in itertools.product(*(range(lo[j], U[j] + 1) for j in range(m - 1))):
            if sum(d) < smin:
                continue
            found.append(tuple([rep[0] - b * sum(d)]
                               + [rep[j + 1] + b * d[j] for j in range(m - 1)]))
    gammas = sorted_unique(found)
    if gammas:
        pcm: tuple[int | None, ...] = tuple(
            max(g[k] for g in gammas) for k in range(m)
        )
    else:
        pcm = (None,) * m
    return LocalProfile(beta=beta, gamma_hat_beta=gammas, per_coord_max=pcm)


def is_member(params: CurveParams, beta: Sequence[int]) -> bool:
    """Whether beta belongs to the generalized semigroup at the m points."""
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    beta = check_tuple(params, beta)
    return _per_coord_max(params, beta) == beta


def dim_L(params: CurveParams, beta: Sequence[int]) -> int:
    """Dimension of the function space attached to beta.

    Counts the values t <= beta_1 at which some absolute maximal gamma
    has gamma_1 = t and gamma_j <= beta_j for j >= 2: within one
    translate family those t form the arithmetic progression
    rep_1 - b*s for s in [smin, sum(U)], and families never share a
    residue class mod b, so the count is a sum of window lengths.
    """
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    beta = check_tuple(params, beta)
    return sum(sum(U) - smin + 1 for _, smin, U in _windows(params, beta))


def _check_J(params: CurveParams, J: Iterable[int], allow_full: bool = False) -> tuple[int, ...]:
    """Validate 1-based point indices and return them 0-based, sorted."""
    Js = sorted(set(J))
    if not Js:
        raise WsgapError("J must be nonempty")
    if any(not isinstance(j, int) or not 1 <= j <= params.m for j in Js):
        raise WsgapError(f"J must contain point indices in 1..{params.m}, got {Js}")
    if len(Js) == params.m and not allow_full:
        raise WsgapError("J must be a proper subset of the point indices")
    return tuple(j - 1 for j in Js)


def nabla_J_empty(
    params: CurveParams,
    alpha: Sequence[int],
    J: Iterable[int],
    method: NablaMethod = "search",
) -> bool:
    """Whether no member agrees with alpha on J and is smaller elsewhere.

    ``J`` holds 1-based point indices.  The default decides the question
    by exhaustive membership tests over the finite candidate box (any
    member outside it would have negative coordinate sum); ``profile``
    answers from the componentwise-maximum characterization instead and
    is used by the large sweeps.  The two agree, and the test suite
    checks that they do.
    """
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    alpha = check_tuple(params, alpha)
    J0 = _check_J(params, J)
    if method == "profile":
        return _nabla_J_empty_profile(params, alpha, J0)
    if method != "search":
        raise WsgapError(f"unknown nabla method {method!r}")
    return _nabla_J_empty_search(params, alpha, J0)


def _nabla_J_empty_profile(params: CurveParams, alpha: IntTuple, J0: tuple[int, ...]) -> bool:
    """Profile characterization: a member of nabla_J exists iff, for every
    j in J, some absolute maximal reaches alpha_j at coordinate j while
    staying <= alpha on J and < alpha elsewhere (componentwise maxima of
    such witnesses assemble the member)."""
    target = tuple(c if k in J0 else c - 1 for k, c in enumerate(alpha))
    pcm = _per_coord_max(params, target)
    if pcm is None:
        return True
    return any(pcm[j] != alpha[j] for j in J0)


def _nabla_J_empty_search(params: CurveParams, alpha: IntTuple, J0: tuple[int, ...]) -> bool:
    m = params.m
    free = [k for k in range(m) if k not in J0]
    his = [alpha[k] - 1 for k in free]
    fixed_sum = sum(alpha[k] for k in J0)
    # The corner candidate has the largest coordinate sum; at or above 2g
    # it is a member outright.
    if fixed_sum + sum(his) >= 2 * params.genus:
        return False
    # Any member has nonnegative coordinate sum, which bounds each free
    # coordinate below once the others sit at their maxima.
    los = [-(fixed_sum + (sum(his) - his[idx])) for idx in range(len(free))]
    # sum of his[t] for t > idx, for the sum-based pruning below
    tail_his = [sum(his[idx + 1:]) for idx in range(len(free))]

    beta = list(alpha)

    def rec(idx: int, partial_sum: int) -> bool:
        """True when a member is found among completions from ``idx`` on."""
        if idx == len(free):
            return is_member(params, tuple(beta))
        k = free[idx]
        for v in range(his[idx], los[idx] - 1, -1):
            if partial_sum + v + tail_his[idx] < 0:
                break  # v only decreases from here; no completion reaches sum >= 0
            beta[k] = v
            if rec(idx + 1, partial_sum + v):
                return True
        return False

    return not rec(0, fixed_sum)


def _proper_big_subsets(m: int) -> list[tuple[int, ...]]:
    """All J with 2 <= |J| <= m-1, as 1-based index tuples."""
    out = []
    for size in range(2, m):
        out.extend(itertools.combinations(range(1, m + 1), size))
    return out


def is_maximal(params: CurveParams, alpha: Sequence[int], method: NablaMethod = "search") -> bool:
    """Member with nabla(alpha) empty, i.e. all single-index nablas empty."""
    alpha = check_tuple(params, alpha)
    if not is_member(params, alpha):
        return False
    return all(nabla_J_empty(params, alpha, (i,), method) for i in range(1, params.m + 1))


def is_absolute_maximal(params: CurveParams, alpha: Sequence[int],
                        method: NablaMethod = "search") -> bool:
    """Maximal with nabla_J empty for every proper J of size >= 2."""
    alpha = check_tuple(params, alpha)
    if not is_maximal(params, alpha, method):
        return False
    return all(nabla_J_empty(params, alpha, J, method) for J in _proper_big_subsets(params.m))


def is_relative_maximal(params: CurveParams, alpha: Sequence[int],
                        method: NablaMethod = "search") -> bool:
    """Maximal with nabla_J nonempty for every proper J of size >= 2."""
    alpha = check_tuple(params, alpha)
    if not is_maximal(params, alpha, method):
        return False
    return not any(nabla_J_empty(params, alpha, J, method) for J in _proper_big_subsets(params.m))


@dataclass(frozen=True)
class RelMaxEquivalence:
    """Three independent evaluations of relative maximality for one tuple."""

    alpha: IntTuple
    definition: bool       # members with empty nabla and all big nabla_J nonempty
    dimension_step: bool   # empty nabla and dim jumps by m-1 from alpha - 1
    pivot_exists: bool     # some i has nabla_i empty and nabla_{i,j} nonempty for all j

    @property
    def agree(self) -> bool:
        return self.definition == self.dimension_step == self.pivot_exists


def check_relmax_equivalence(params: CurveParams, alpha: Sequence[int],
                             method: NablaMethod = "search") -> RelMaxEquivalence:
    """Evaluate the three characterizations of relative maximality."""
    if params.m < 2:
        raise BadPointCountError("the oracle needs m >= 2")
    alpha = check_tuple(params, alpha)
    m = params.m

    definition = is_relative_maximal(params, alpha, method)

    nabla_empty = all(nabla_J_empty(params, alpha, (i,), method) for i in range(1, m + 1))
    ones = tuple(c - 1 for c in alpha)
    dimension_step = nabla_empty and dim_L(params, alpha) == dim_L(params, ones) + (m - 1)

    pivot_exists = False
    for i in range(1, m + 1):
        if not nabla_J_empty(params, alpha, (i,), method):
            continue
        if m == 2:
            # the pair set {i, j} is the full index set: it holds exactly
            # the tuple alpha itself, so nonemptiness is membership
            if is_member(params, alpha):
                pivot_exists = True
                break
        else:
            if all(not nabla_J_empty(params, alpha, (i, j), method)
                   for j in range(1, m + 1) if j != i):
                pivot_exists = True
                break

    return RelMaxEquivalence(alpha=alpha, definition=definition,
                             dimension_step=dimension_step, pivot_exists=pivot_exists)
