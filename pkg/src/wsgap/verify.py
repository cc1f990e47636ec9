"""Conformance harness: fixture replay and cross-method property sweeps.

``run_fixtures`` replays the embedded reference values for the two
preset curves (relative maximals, pure gaps, nabla sets, witness
choices) with exact set equality.  ``run_property_sweep`` runs the
cross-method and structural invariants over every coprime (a, b, m)
inside the requested bounds.  ``run_oracle_invariants`` stress-tests
the membership oracle with seeded random trials, and
``check_definition_level`` re-derives the closed-form maximal families
from the raw emptiness definitions.  All entry points return a
``ConformanceReport`` that serializes into the command-line envelope.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import fixtures as fx
from . import gapsets as gs
from . import maximals as mx
from . import oracle
from .core import (
    Box,
    CurveParams,
    IntTuple,
    add,
    curve_params,
    glb,
    lub,
    theta_vector,
)

DEFAULT_SEED = 20240811


def _mix_seed(*parts: int) -> int:
    """Fold integers into one seed without salted string hashing."""
    s = 0
    for part in parts:
        s = (s * 1000003 + part) % (1 << 63)
    return s


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str            # "fixture" or "property"
    passed: bool
    detail: str = ""
    ms: float = 0.0

    def to_payload(self) -> dict:
        return {"name": self.name, "kind": self.kind, "passed": self.passed,
                "detail": self.detail, "ms": round(self.ms, 3)}


@dataclass
class ConformanceReport:
    entries: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def failed(self) -> int:
        return sum(not e.passed for e in self.entries)

    def extend(self, other: "ConformanceReport") -> "ConformanceReport":
        self.entries.extend(other.entries)
        return self

    def sorted(self) -> "ConformanceReport":
        return ConformanceReport(entries=sorted(self.entries, key=lambda e: e.name))

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.passed]

    def to_payload(self) -> dict:
        return {
            "checks": [e.to_payload() for e in self.entries],
            "passed": self.passed,
            "failed": self.failed,
            "total": len(self.entries),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class Fixture:
    """One replayable reference value with its provenance string."""

    name: str
    params: CurveParams
    kind: str            # relative_maximals | pure_gaps | nabla_set | witnesses
    expected: tuple
    source: str
    arg: IntTuple | None = None


def _params(spec: tuple[int, int, int, int]) -> CurveParams:
    a, b, m, q = spec
    return curve_params(a, b, m, field_size=q)


def builtin_fixtures() -> tuple[Fixture, ...]:
    """The embedded corpus for the two preset curves."""
    herm = _params(fx.HERMITIAN_Q4)
    ntc = _params(fx.NORM_TRACE_L2_R3)
    out = [
        Fixture("hermitian-q4-relmax", herm, "relative_maximals",
                tuple(sorted(fx.RELATIVE_MAXIMALS_POSITIVE_453)),
                "Hermitian curve over GF(16), three points"),
        Fixture("hermitian-q4-puregaps", herm, "pure_gaps",
                tuple(sorted(fx.PURE_GAPS_453)),
                "Hermitian curve over GF(16), three points"),
        Fixture("norm-trace-l2-r3-relmax", ntc, "relative_maximals",
                tuple(sorted(fx.RELATIVE_MAXIMALS_POSITIVE_473)),
                "norm-trace curve over GF(8), three points"),
        Fixture("norm-trace-l2-r3-puregaps", ntc, "pure_gaps",
                tuple(sorted(fx.PURE_GAPS_473)),
                "norm-trace curve over GF(8), three points"),
        Fixture("hermitian-q4-witnesses", herm, "witnesses",
                tuple(sorted(fx.PURE_GAP_WITNESSES_453.items())),
                "Hermitian curve over GF(16), pure-gap witness choices"),
    ]
    for k, (gamma, nabla) in enumerate(sorted(fx.NABLA_SETS_453.items()), start=1):
        out.append(Fixture(f"hermitian-q4-nabla-{k:02d}", herm, "nabla_set",
                           tuple(sorted(nabla)),
                           f"Hermitian curve over GF(16), nabla set of {gamma}",
                           arg=gamma))
    return tuple(out)


def _diff_detail(computed: Sequence, expected: Sequence) -> str:
    missing = sorted(set(expected) - set(computed))
    extra = sorted(set(computed) - set(expected))
    return f"missing={missing[:8]} extra={extra[:8]}"


def _evaluate_fixture(f: Fixture) -> CheckResult:
    t0 = time.perf_counter()
    if f.kind == "relative_maximals":
        computed = mx.expand_positive(mx.relative_maximals_region(f.params))
        also = mx.lambda_nonneg(f.params)
        if computed != also:
            return CheckResult(f.name, "fixture", False,
                               "expansion and closed formula disagree",
                               (time.perf_counter() - t0) * 1000)
    elif f.kind == "pure_gaps":
        profile = gs.pure_gaps(f.params, method="profile").pure_gaps
        inter = gs.pure_gaps(f.params, method="intersection").pure_gaps
        if profile != inter:
            return CheckResult(f.name, "fixture", False,
                               "profile and intersection methods disagree",
                               (time.perf_counter() - t0) * 1000)
        computed = profile
    elif f.kind == "nabla_set":
        computed = gs.nabla_bar_nonneg(f.params, f.arg)
    elif f.kind == "witnesses":
        computed = tuple(sorted(
            (gap, gs.pure_gap_witness(f.params, gap))
            for gap, _ in f.expected
        ))
    else:
        raise ValueError(f"unknown fixture kind {f.kind!r}")
    passed = tuple(sorted(computed)) == tuple(sorted(f.expected))
    detail = "" if passed else _diff_detail(computed, f.expected)
    return CheckResult(f.name, "fixture", passed, detail,
                       (time.perf_counter() - t0) * 1000)


def run_fixtures(fixtures: Iterable[Fixture] | None = None) -> ConformanceReport:
    """Replay the fixture corpus; failures become report entries."""
    report = ConformanceReport()
    for f in builtin_fixtures() if fixtures is None else fixtures:
        report.entries.append(_evaluate_fixture(f))
    return report.sorted()


def sweep_cells(max_a: int = 5, max_b: int = 9, max_m: int = 4) -> tuple[CurveParams, ...]:
    """All coprime (a, b) with 2 <= a <= max_a, 2 <= b <= max_b, and
    every m with 2 <= m <= min(max_m, a + 1)."""
    cells = []
    for a in range(2, max_a + 1):
        for b in range(2, max_b + 1):
            if math.gcd(a, b) != 1:
                continue
            for m in range(2, min(max_m, a + 1) + 1):
                cells.append(curve_params(a, b, m))
    return tuple(cells)


# ---------------------------------------------------------------------------
# per-cell property checks

def _axis_set(gap_set: set[IntTuple], m: int, k: int) -> tuple[int, ...]:
    out = []
    for t in gap_set:
        if t[k] > 0 and all(t[j] == 0 for j in range(m) if j != k):
            out.append(t[k])
    return tuple(sorted(out))


def _permuted(t: IntTuple, perm: Sequence[int]) -> IntTuple:
    return tuple(t[p] for p in perm)


def _cell_prefix(p: CurveParams) -> str:
    return f"a{p.a}-b{p.b}-m{p.m}"


def _check_gap_methods(p: CurveParams) -> list[CheckResult]:
    base = gs.gaps(p, method="complement").gaps
    results = []
    for method in ("union_nabla", "explicit_s"):
        got = gs.gaps(p, method=method).gaps
        ok = got == base
        results.append(CheckResult(
            f"{_cell_prefix(p)}:gap-methods-agree:{method}", "property", ok,
            "" if ok else _diff_detail(got, base)))
    return results


def _check_pure_methods(p: CurveParams) -> list[CheckResult]:
    prof = gs.pure_gaps(p, method="profile").pure_gaps
    inter = gs.pure_gaps(p, method="intersection").pure_gaps
    ok = prof == inter
    return [CheckResult(f"{_cell_prefix(p)}:pure-methods-agree", "property", ok,
                        "" if ok else _diff_detail(inter, prof))]


def _check_zero_family(p: CurveParams) -> list[CheckResult]:
    g_off = gs.gaps(p, method="union_nabla").gaps
    g_on = gs.gaps(p, method="union_nabla", include_zero_family=True).gaps
    p_off = gs.pure_gaps(p, method="intersection").pure_gaps
    p_on = gs.pure_gaps(p, method="intersection", include_zero_family=True).pure_gaps
    ok = g_off == g_on and p_off == p_on
    return [CheckResult(f"{_cell_prefix(p)}:zero-family-indifferent", "property", ok,
                        "" if ok else "zero-family translates changed an output")]


def _check_axis_gaps(p: CurveParams) -> list[CheckResult]:
    """Genus-many gaps along every axis; the first axis recovers the
    numerical semigroup (the later points can carry a different gap
    sequence of the same size)."""
    gap_set = set(gs.gaps(p).gaps)
    expected = gs.numerical_gaps(p.a, p.b)
    results = []
    later_axes = set()
    for k in range(p.m):
        got = _axis_set(gap_set, p.m, k)
        ok = len(got) == p.genus
        detail = "" if ok else f"{len(got)} axis gaps, genus is {p.genus}"
        if ok and k == 0 and got != expected:
            ok, detail = False, f"axis gaps {got} != semigroup gaps {expected}"
        if k >= 1:
            later_axes.add(got)
        results.append(CheckResult(
            f"{_cell_prefix(p)}:axis-gaps-coordinate-{k + 1}", "property", ok, detail))
    if p.m >= 3:
        ok = len(later_axes) == 1
        results.append(CheckResult(
            f"{_cell_prefix(p)}:axis-gaps-later-points-agree", "property", ok,
            "" if ok else f"later axes carry different gap sequences {later_axes}"))
    return results


def _check_superset(p: CurveParams) -> list[CheckResult]:
    a_star, a_set = gs.candidate_superset(p)
    star, plain = set(a_star), set(a_set)
    bad = [t for t in gs.pure_gaps(p).pure_gaps
           if t[0] not in star or any(c not in plain for c in t[1:])]
    ok = not bad
    return [CheckResult(f"{_cell_prefix(p)}:pure-gaps-in-candidate-superset",
                        "property", ok, "" if ok else f"outliers={bad[:8]}")]


def _check_symmetry(p: CurveParams) -> list[CheckResult]:
    report = gs.gaps(p)
    gap_set, pure_set = set(report.gaps), set(report.pure_gaps)
    ok = True
    detail = ""
    for perm_tail in itertools.permutations(range(1, p.m)):
        perm = (0,) + perm_tail
        if {_permuted(t, perm) for t in gap_set} != gap_set:
            ok, detail = False, f"gap set moved by permutation {perm}"
            break
        if {_permuted(t, perm) for t in pure_set} != pure_set:
            ok, detail = False, f"pure-gap set moved by permutation {perm}"
            break
    return [CheckResult(f"{_cell_prefix(p)}:coordinate-symmetry", "property",
                        ok, detail)]


def _check_region_families(p: CurveParams) -> list[CheckResult]:
    absolute = mx.absolute_maximals_region(p)
    relative = mx.relative_maximals_region(p)
    ok = len(absolute.region_reps) == p.b and len(relative.region_reps) == p.b
    detail = "" if ok else "region family of the wrong size"
    if ok and p.m == 2 and absolute.region_reps != relative.region_reps:
        ok, detail = False, "absolute and relative families differ at m=2"
    if ok:
        closed = mx.lambda_nonneg(p, include_zero_family=True)
        expanded = mx.expand_nonneg(relative)
        if closed != expanded:
            ok, detail = False, _diff_detail(closed, expanded)
    if ok and mx.lambda_nonneg(p) != mx.expand_positive(relative):
        ok, detail = False, "positive expansion disagrees with the closed formula"
    return [CheckResult(f"{_cell_prefix(p)}:region-families", "property", ok, detail)]


def _check_formula_classification(p: CurveParams, sample: int = 12,
                                  seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Closed-form families against the emptiness-based classifiers.

    Uses the profile route of the classifiers so the full sweep stays
    fast; the search route is exercised by ``check_definition_level``.
    """
    rng = random.Random(_mix_seed(seed, p.a, p.b, p.m, 4))
    relative = mx.relative_maximals_region(p)
    absolute = mx.absolute_maximals_region(p)
    ok, detail = True, ""
    for t in mx.lambda_nonneg(p):
        if not oracle.is_relative_maximal(p, t, method="profile"):
            ok, detail = False, f"{t} not classified relative maximal"
            break
        if p.m >= 3 and oracle.is_absolute_maximal(p, t, method="profile"):
            ok, detail = False, f"{t} classified absolute maximal"
            break
    if ok:
        for t in mx.expand_positive(absolute):
            if not oracle.is_absolute_maximal(p, t, method="profile"):
                ok, detail = False, f"{t} not classified absolute maximal"
                break
    if ok:
        pool = mx.lambda_nonneg(p) + mx.expand_positive(absolute)
        for _ in range(sample):
            x, y = rng.choice(pool), rng.choice(pool)
            t = lub([x, y])
            if mx.family_contains(relative, t) or mx.family_contains(absolute, t):
                continue
            if oracle.is_relative_maximal(p, t, method="profile") or \
                    oracle.is_absolute_maximal(p, t, method="profile"):
                ok, detail = False, f"member {t} outside both families classified maximal"
                break
    return [CheckResult(f"{_cell_prefix(p)}:formula-classification", "property",
                        ok, detail)]


def _check_sigma(p: CurveParams) -> list[CheckResult]:
    if p.m != 2:
        return []
    results = []
    prefix = _cell_prefix(p)
    table = gs.sigma_pair(p)
    g = p.genus
    ok = sorted(table.sigma) == list(range(1, g + 1)) and len(table.gamma_pairs) == g
    results.append(CheckResult(f"{prefix}:sigma-bijection", "property", ok,
                               "" if ok else f"sigma={table.sigma}"))
    literal = gs.sigma_literal(p)
    expected = tuple(table.gaps_q2[s - 1] for s in table.sigma)
    ok = literal == expected
    results.append(CheckResult(f"{prefix}:sigma-literal-definition", "property", ok,
                               "" if ok else f"{literal} != {expected}"))
    axis2 = tuple(t for t in range(1, 2 * g + 1) if not oracle.is_member(p, (0, t)))
    ok = table.gaps_q2 == axis2
    results.append(CheckResult(f"{prefix}:sigma-second-point-gap-sequence",
                               "property", ok,
                               "" if ok else f"{table.gaps_q2} != {axis2}"))
    gaps_pairing = gs.sigma_gap_set(table)
    gaps_generic = gs.gaps(p).gaps
    ok = gaps_pairing == gaps_generic
    results.append(CheckResult(f"{prefix}:sigma-gap-set", "property", ok,
                               "" if ok else _diff_detail(gaps_pairing, gaps_generic)))
    pure_pairing = gs.sigma_pure_gap_set(table)
    pure_generic = gs.pure_gaps(p).pure_gaps
    ok = pure_pairing == pure_generic and len(pure_generic) == len(table.inversions)
    results.append(CheckResult(f"{prefix}:sigma-pure-gaps-inversions", "property", ok,
                               "" if ok else _diff_detail(pure_pairing, pure_generic)))
    return results


def _check_witnesses(p: CurveParams) -> list[CheckResult]:
    pure = gs.pure_gaps(p).pure_gaps
    ok, detail = True, ""
    for t in pure:
        witness = gs.pure_gap_witness(p, t)
        if witness is None:
            ok, detail = False, f"no witness for pure gap {t}"
            break
        if glb(list(witness)) != t or tuple(w[i] for i, w in enumerate(witness)) != t:
            ok, detail = False, f"witness for {t} has the wrong common point"
            break
        if any(w[j] <= t[j] for i, w in enumerate(witness)
               for j in range(p.m) if j != i):
            ok, detail = False, f"witness for {t} not strictly dominating"
            break
    if ok:
        for t in gs.gaps(p).gaps:
            if t not in pure and gs.pure_gap_witness(p, t) is not None:
                ok, detail = False, f"witness found for non-pure gap {t}"
                break
    return [CheckResult(f"{_cell_prefix(p)}:witness-coherence", "property", ok, detail)]


def _check_report_sanity(p: CurveParams, sample: int = 50,
                         seed: int = DEFAULT_SEED) -> list[CheckResult]:
    report = gs.gaps(p)
    B = 2 * p.genus - 1
    ok, detail = True, ""
    gap_set = set(report.gaps)
    if list(report.gaps) != sorted(gap_set):
        ok, detail = False, "gap list not sorted or not duplicate-free"
    if ok and any(min(t) < 0 or sum(t) > B for t in report.gaps):
        ok, detail = False, "gap outside the bounding simplex"
    if ok and not set(report.pure_gaps) <= gap_set:
        ok, detail = False, "pure gaps not contained in gaps"
    if ok:
        rng = random.Random(_mix_seed(seed, p.a, p.b, p.m, 2))
        for _ in range(sample):
            t = tuple(rng.randrange(B + 1) for _ in range(p.m))
            if sum(t) > B:
                continue
            in_gaps = t in gap_set
            if in_gaps == oracle.is_member(p, t):
                ok, detail = False, f"grid and oracle disagree on {t}"
                break
    return [CheckResult(f"{_cell_prefix(p)}:gap-report-sanity", "property", ok, detail)]


_PROPERTY_CHECKS: dict[str, Callable[[CurveParams], list[CheckResult]]] = {
    "gap-methods": _check_gap_methods,
    "pure-methods": _check_pure_methods,
    "zero-family": _check_zero_family,
    "axis-gaps": _check_axis_gaps,
    "superset": _check_superset,
    "symmetry": _check_symmetry,
    "region-families": _check_region_families,
    "formula-classification": _check_formula_classification,
    "sigma": _check_sigma,
    "witnesses": _check_witnesses,
    "report-sanity": _check_report_sanity,
}

PROPERTY_CHECK_NAMES = tuple(_PROPERTY_CHECKS)


def run_property_sweep(max_a: int = 5, max_b: int = 9, max_m: int = 4,
                       checks: Sequence[str] | None = None,
                       workers: int = 1) -> ConformanceReport:
    """Run the structural invariants over the whole parameter sweep.

    ``checks`` selects a subset of ``PROPERTY_CHECK_NAMES``; cells run
    independently (optionally on a thread pool) and the merged report is
    sorted by check name, so the output does not depend on scheduling.
    """
    selected = PROPERTY_CHECK_NAMES if checks is None else tuple(checks)
    unknown = [c for c in selected if c not in _PROPERTY_CHECKS]
    if unknown:
        raise ValueError(f"unknown property checks: {unknown}")
    cells = sweep_cells(max_a, max_b, max_m)

    def run_cell(p: CurveParams) -> list[CheckResult]:
        out = []
        for name in selected:
            t0 = time.perf_counter()
            results = _PROPERTY_CHECKS[name](p)
            ms = (time.perf_counter() - t0) * 1000 / max(len(results), 1)
            out.extend(CheckResult(r.name, r.kind, r.passed, r.detail, ms)
                       for r in results)
        return out

    report = ConformanceReport()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for results in pool.map(run_cell, cells):
                report.entries.extend(results)
    else:
        for p in cells:
            report.entries.extend(run_cell(p))
    skipped = [(a, b) for a in range(2, max_a + 1) for b in range(2, max_b + 1)
               if math.gcd(a, b) != 1]
    report.entries.append(CheckResult(
        "sweep-coverage", "property", True,
        f"{len(cells)} cells checked; non-coprime pairs skipped: {skipped}"))
    return report.sorted()


# ---------------------------------------------------------------------------
# randomized oracle invariants

def _random_tuple(rng: random.Random, p: CurveParams) -> IntTuple:
    lo, hi = -p.b - 2, 2 * p.genus + p.b
    return tuple(rng.randint(lo, hi) for _ in range(p.m))


def _random_member(rng: random.Random, p: CurveParams) -> IntTuple:
    reps = mx.relative_maximals_region(p).region_reps + \
        mx.absolute_maximals_region(p).region_reps
    def translate() -> IntTuple:
        d = tuple(rng.randint(-2, 2) for _ in range(p.m - 1))
        return add(rng.choice(reps), theta_vector(p, d))
    return lub([translate(), translate()])


def run_oracle_invariants(max_a: int = 5, max_b: int = 9, max_m: int = 4,
                          trials: int = 1000,
                          seed: int = DEFAULT_SEED) -> ConformanceReport:
    """Seeded random trials of the oracle invariants over the sweep."""
    report = ConformanceReport()
    for p in sweep_cells(max_a, max_b, max_m):
        report.entries.extend(_oracle_invariants_for(p, trials, seed))
    return report.sorted()


def _oracle_invariants_for(p: CurveParams, trials: int, seed: int) -> list[CheckResult]:
    rng = random.Random(_mix_seed(seed, p.a, p.b, p.m, 1))
    prefix = _cell_prefix(p)
    results = []

    def record(name: str, failure: str | None, t0: float) -> None:
        results.append(CheckResult(f"{prefix}:{name}", "property", failure is None,
                                   failure or "", (time.perf_counter() - t0) * 1000))

    # lattice invariance of membership (and of the maximal classifiers)
    t0 = time.perf_counter()
    failure = None
    for k in range(trials):
        alpha = _random_tuple(rng, p)
        d = tuple(rng.randint(-2, 2) for _ in range(p.m - 1))
        shifted = add(alpha, theta_vector(p, d))
        if oracle.is_member(p, alpha) != oracle.is_member(p, shifted):
            failure = f"membership not lattice-invariant at {alpha}, shift {d}"
            break
        if k % 25 == 0:
            if oracle.is_relative_maximal(p, alpha, method="profile") != \
                    oracle.is_relative_maximal(p, shifted, method="profile"):
                failure = f"relative maximality not lattice-invariant at {alpha}"
                break
            if oracle.is_absolute_maximal(p, alpha, method="profile") != \
                    oracle.is_absolute_maximal(p, shifted, method="profile"):
                failure = f"absolute maximality not lattice-invariant at {alpha}"
                break
    record("theta-invariance", failure, t0)

    # coordinate sum at least 2g forces membership
    t0 = time.perf_counter()
    failure = None
    for _ in range(max(trials // 5, 1)):
        alpha = list(_random_tuple(rng, p))
        deficit = 2 * p.genus - sum(alpha)
        if deficit > 0:
            alpha[0] += deficit + rng.randint(0, p.b)
        if not oracle.is_member(p, tuple(alpha)):
            failure = f"{tuple(alpha)} with sum >= 2g rejected"
            break
    record("two-genus-rule", failure, t0)

    # members are closed under componentwise maxima
    t0 = time.perf_counter()
    failure = None
    for _ in range(max(trials // 5, 1)):
        x, y = _random_member(rng, p), _random_member(rng, p)
        if not (oracle.is_member(p, x) and oracle.is_member(p, y)):
            failure = f"constructed member {x} or {y} rejected"
            break
        if not oracle.is_member(p, lub([x, y])):
            failure = f"lub of members {x}, {y} rejected"
            break
    record("lub-closure", failure, t0)

    # dimension increments and the membership equivalence
    t0 = time.perf_counter()
    failure = None
    for _ in range(max(trials // 5, 1)):
        alpha = _random_tuple(rng, p)
        dim = oracle.dim_L(p, alpha)
        steps = []
        for i in range(p.m):
            down = tuple(c - (1 if k == i else 0) for k, c in enumerate(alpha))
            steps.append(dim - oracle.dim_L(p, down))
        if any(s not in (0, 1) for s in steps):
            failure = f"dimension step outside {{0,1}} at {alpha}: {steps}"
            break
        if oracle.is_member(p, alpha) != all(s == 1 for s in steps):
            failure = f"membership does not match unit increments at {alpha}"
            break
    record("dimension-increments", failure, t0)

    # exact dimension in the high-degree regime
    t0 = time.perf_counter()
    failure = None
    for _ in range(max(trials // 5, 1)):
        alpha = list(_random_tuple(rng, p))
        deficit = 2 * p.genus - 1 - sum(alpha)
        if deficit > 0:
            alpha[rng.randrange(p.m)] += deficit + rng.randint(0, p.b)
        expected = sum(alpha) - p.genus + 1
        if oracle.dim_L(p, tuple(alpha)) != expected:
            failure = f"dimension at {tuple(alpha)} != {expected}"
            break
    record("riemann-roch-regime", failure, t0)

    # closed-form windows against the explicit enumeration
    t0 = time.perf_counter()
    failure = None
    for _ in range(max(trials // 10, 1)):
        alpha = _random_tuple(rng, p)
        profile = oracle.local_absolute_maximals(p, alpha)
        if oracle.per_coord_max(p, alpha) != (
                None if profile.per_coord_max[0] is None else profile.per_coord_max):
            failure = f"window maxima disagree with enumeration at {alpha}"
            break
        firsts = {g[0] for g in profile.gamma_hat_beta}
        if oracle.dim_L(p, alpha) != len(firsts):
            failure = f"window dimension disagrees with enumeration at {alpha}"
            break
    record("profile-enumeration-agreement", failure, t0)

    # the two emptiness routes agree
    t0 = time.perf_counter()
    failure = None
    subsets = [J for size in range(1, p.m)
               for J in itertools.combinations(range(1, p.m + 1), size)]
    for _ in range(max(trials // 20, 1)):
        alpha = tuple(rng.randint(-2, 2 * p.genus - 1) for _ in range(p.m))
        J = rng.choice(subsets)
        if oracle.nabla_J_empty(p, alpha, J, "search") != \
                oracle.nabla_J_empty(p, alpha, J, "profile"):
            failure = f"nabla emptiness routes disagree at {alpha}, J={J}"
            break
    record("nabla-routes-agreement", failure, t0)

    return results


# ---------------------------------------------------------------------------
# definition-level reclassification

def check_definition_level(params: CurveParams, sample_size: int = 50,
                           seed: int = DEFAULT_SEED) -> ConformanceReport:
    """Reclassify the closed-form maximals from the raw definitions.

    Every family element inside the box [-(b+1), 2g]^m must pass the
    search-based (exhaustive) classifier for its own kind and fail the
    other kind for m >= 3, and sampled members outside both families
    must fail both classifiers.
    """
    p = params
    box = Box(lo=(-(p.b + 1),) * p.m, hi=(2 * p.genus,) * p.m)
    relative = mx.relative_maximals_region(p)
    absolute = mx.absolute_maximals_region(p)
    prefix = _cell_prefix(p)
    report = ConformanceReport()

    t0 = time.perf_counter()
    failure = None
    for t in mx.expand_in_box(relative, box):
        if not oracle.is_relative_maximal(p, t, method="search"):
            failure = f"{t} fails the relative definition"
            break
        if p.m >= 3 and oracle.is_absolute_maximal(p, t, method="search"):
            failure = f"{t} passes the absolute definition"
            break
    report.entries.append(CheckResult(
        f"{prefix}:definition-level-relative", "property", failure is None,
        failure or "", (time.perf_counter() - t0) * 1000))

    t0 = time.perf_counter()
    failure = None
    for t in mx.expand_in_box(absolute, box):
        if not oracle.is_absolute_maximal(p, t, method="search"):
            failure = f"{t} fails the absolute definition"
            break
        if p.m >= 3 and oracle.is_relative_maximal(p, t, method="search"):
            failure = f"{t} passes the relative definition"
            break
    report.entries.append(CheckResult(
        f"{prefix}:definition-level-absolute", "property", failure is None,
        failure or "", (time.perf_counter() - t0) * 1000))

    t0 = time.perf_counter()
    failure = None
    rng = random.Random(_mix_seed(seed, p.a, p.b, p.m, 3))
    tested = 0
    while tested < sample_size:
        t = _random_member(rng, p)
        if t not in box:
            continue
        if mx.family_contains(relative, t) or mx.family_contains(absolute, t):
            continue
        tested += 1
        if oracle.is_relative_maximal(p, t, method="search") or \
                oracle.is_absolute_maximal(p, t, method="search"):
            failure = f"member {t} outside both families passes a definition"
            break
    report.entries.append(CheckResult(
        f"{prefix}:definition-level-nonmaximal-sample", "property", failure is None,
        failure or "", (time.perf_counter() - t0) * 1000))

    return report.sorted()
