"""Weierstrass semigroups, gaps and pure gaps at several points.

Exact combinatorics for curves with a plane model f(y) = g(x), deg f = a,
deg g = b, gcd(a, b) = 1: generalized-semigroup membership, dimensions of
the attached function spaces, absolute and relative maximal elements,
gap and pure-gap enumeration by independent cross-checking methods, the
two-point gap pairing, and a conformance harness replaying the worked
examples for the Hermitian and norm-trace presets.
"""

__version__ = "0.1.0"

from .core import (
    Box,
    BadPointCountError,
    CurveParams,
    EmptyInputError,
    FieldTooSmallWarning,
    NotCoprimeError,
    ThetaBasis,
    WsgapError,
    box_tuples,
    curve_params,
    glb,
    hermitian_params,
    is_prime_power,
    lub,
    norm_trace_params,
    reduce_to_region,
    theta_basis,
    theta_vector,
)
from .maximals import (
    MaximalSet,
    absolute_maximals_region,
    expand_in_box,
    expand_nonneg,
    expand_positive,
    lambda_nonneg,
    relative_maximals_region,
)
from .oracle import (
    LocalProfile,
    RelMaxEquivalence,
    check_relmax_equivalence,
    dim_L,
    is_absolute_maximal,
    is_maximal,
    is_member,
    is_relative_maximal,
    local_absolute_maximals,
    nabla_J_empty,
    per_coord_max,
)
from .gapsets import (
    GapReport,
    SigmaTable,
    candidate_superset,
    gaps,
    nabla_bar_nonneg,
    numerical_gaps,
    pure_gap_witness,
    pure_gaps,
    sigma_gap_set,
    sigma_literal,
    sigma_pair,
    sigma_pure_gap_set,
)
from .verify import (
    CheckResult,
    ConformanceReport,
    Fixture,
    builtin_fixtures,
    check_definition_level,
    run_fixtures,
    run_oracle_invariants,
    run_property_sweep,
    sweep_cells,
)

__all__ = [name for name in dir() if not name.startswith("_")]
