"""Exact-arithmetic weight combinatorics for rank-3 mod-p types.

The package factors into small layers: integer digit arithmetic and
Frobenius orbits (`arith`), restricted weight classes (`weights`), tame
inertial types (`tame_types`), rank-one module invariants and reduction
candidate tables (`breuil`), predicted weight sets (`predicted`),
parabolic induction constituents (`induction`), weight elimination
(`elimination`), weight-cycling closures (`cycling`), slope bounds
(`slopes`), and randomized invariant sweeps (`sweeps`).
"""

from .arith import (
    CASE_I,
    CASE_II,
    DIVISIBLE,
    Decomposition,
    ExpClass,
    FrobOrbit,
    decompose_exponent,
    embed_niveau,
    exp_class,
    niveau_of,
    orbit,
    orbit_of,
)
from .weights import (
    WeightClass,
    alcove,
    canonicalize,
    dim_weight,
    dual,
    is_delta_generic,
    is_generic,
    is_strongly_generic,
    shadow,
    shadow_inverse,
    weight,
    weyl_dim,
)
from .tame_types import (
    FORCED,
    HYPOTHESIS_VIOLATED,
    NOT_ISOMORPHIC,
    TameType,
    distinguish,
    dual_twist,
    gap_interval_condition,
    iso,
    sum_of_characters,
    tau,
    tau_exponent,
    type_from_exponent,
)
from .breuil import (
    BreuilModule,
    LiftType,
    ReductionCandidates,
    cuspidal,
    cuspidal_dual,
    fractional_shift,
    inertial_character,
    is_maximal,
    is_minimal,
    maximal_model,
    principal_series,
    random_module,
    reduction_candidates,
    validate,
)
from .predicted import (
    PredictedSet,
    enumerate_predicted,
    is_predicted,
    nine_weight_families,
    nine_weight_table,
    theta,
)
from .induction import (
    AntidominantCochar,
    LeviWeight,
    MU_ONE,
    MU_TWO,
    implied_weights,
    induction_constituents,
    levi_restriction,
)
from .elimination import (
    CONSISTENT,
    ELIMINATED,
    EliminationReport,
    UnsupportedWeight,
    eliminate,
    intersection_sets,
    lift_types_for,
)
from .cycling import ConsistencyError, CyclingGraph, cycle, emit_dot, normalize_parameters
from .slopes import (
    HodgeData,
    hecke_normalization,
    hodge_data,
    newton_hodge_gap,
    ordinarity_threshold,
    slope_criticality,
)

__version__ = "0.1.0"

__all__ = [
    "CASE_I",
    "CASE_II",
    "DIVISIBLE",
    "Decomposition",
    "ExpClass",
    "FrobOrbit",
    "decompose_exponent",
    "embed_niveau",
    "exp_class",
    "niveau_of",
    "orbit",
    "orbit_of",
    "WeightClass",
    "alcove",
    "canonicalize",
    "dim_weight",
    "dual",
    "is_delta_generic",
    "is_generic",
    "is_strongly_generic",
    "shadow",
    "shadow_inverse",
    "weight",
    "weyl_dim",
    "FORCED",
    "HYPOTHESIS_VIOLATED",
    "NOT_ISOMORPHIC",
    "TameType",
    "distinguish",
    "dual_twist",
    "gap_interval_condition",
    "iso",
    "sum_of_characters",
    "tau",
    "tau_exponent",
    "type_from_exponent",
    "BreuilModule",
    "LiftType",
    "ReductionCandidates",
    "cuspidal",
    "cuspidal_dual",
    "fractional_shift",
    "inertial_character",
    "is_maximal",
    "is_minimal",
    "maximal_model",
    "principal_series",
    "random_module",
    "reduction_candidates",
    "validate",
    "PredictedSet",
    "enumerate_predicted",
    "is_predicted",
    "nine_weight_families",
    "nine_weight_table",
    "theta",
    "AntidominantCochar",
    "LeviWeight",
    "MU_ONE",
    "MU_TWO",
    "implied_weights",
    "induction_constituents",
    "levi_restriction",
    "CONSISTENT",
    "ELIMINATED",
    "EliminationReport",
    "UnsupportedWeight",
    "eliminate",
    "intersection_sets",
    "lift_types_for",
    "ConsistencyError",
    "CyclingGraph",
    "cycle",
    "emit_dot",
    "normalize_parameters",
    "HodgeData",
    "hecke_normalization",
    "hodge_data",
    "newton_hodge_gap",
    "ordinarity_threshold",
    "slope_criticality",
]
