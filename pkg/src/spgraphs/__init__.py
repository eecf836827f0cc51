"""Subset partition graphs: verifiers, randomized subdivision, spindles."""

from .core import (
    BudgetExceededError,
    FacetSet,
    InvalidSpgError,
    PropertyReport,
    Spg,
    SpgProperty,
    Spindle,
    SymbolTable,
    check_adjacency,
    check_connectivity,
    check_dimension_reduction,
    check_endpoint_count,
    check_partition,
    check_singleton,
    check_strong_adjacency,
    diameter,
    graph_distance,
    max_degree,
    restrict,
    validate,
    witness_text,
)
from .document import DocumentError, DocumentVersionError, parse, serialize
from .experiments import (
    DimensionReductionSummary,
    SweepReport,
    SweepRow,
    sweep_r,
    verify_dimension_reduction_on_paths,
)
from .spindle import (
    SpindleTemplate,
    build_exponential_spindle,
    build_path_template,
    build_spindle_template,
    build_star_template,
    sliding_window_path,
)
from .transform import (
    BadEvent,
    BadEventEstimate,
    ConstructionVerificationError,
    PermutationAssignment,
    ResamplingExhaustedError,
    Strategy,
    TransformConfig,
    TransformResult,
    bad_event_occurs,
    build_subdivision,
    check_localization,
    construct_with_resampling,
    estimate_bad_event_probability,
    find_bad_events,
    lift_facet,
    lift_product,
    lll_sufficient,
    min_multiplier,
    row_structure_violations,
    subdivision_path,
)

__version__ = "0.1.0"

__all__ = [
    "BadEvent",
    "BadEventEstimate",
    "BudgetExceededError",
    "ConstructionVerificationError",
    "DimensionReductionSummary",
    "DocumentError",
    "DocumentVersionError",
    "FacetSet",
    "InvalidSpgError",
    "PermutationAssignment",
    "PropertyReport",
    "ResamplingExhaustedError",
    "Spg",
    "SpgProperty",
    "Spindle",
    "SpindleTemplate",
    "Strategy",
    "SweepReport",
    "SweepRow",
    "SymbolTable",
    "TransformConfig",
    "TransformResult",
    "bad_event_occurs",
    "build_exponential_spindle",
    "build_path_template",
    "build_spindle_template",
    "build_star_template",
    "build_subdivision",
    "check_adjacency",
    "check_connectivity",
    "check_dimension_reduction",
    "check_endpoint_count",
    "check_localization",
    "check_partition",
    "check_singleton",
    "check_strong_adjacency",
    "construct_with_resampling",
    "diameter",
    "estimate_bad_event_probability",
    "find_bad_events",
    "graph_distance",
    "lift_facet",
    "lift_product",
    "lll_sufficient",
    "max_degree",
    "min_multiplier",
    "parse",
    "restrict",
    "row_structure_violations",
    "serialize",
    "sliding_window_path",
    "subdivision_path",
    "sweep_r",
    "validate",
    "verify_dimension_reduction_on_paths",
    "witness_text",
]
