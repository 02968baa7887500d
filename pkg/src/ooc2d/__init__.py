"""Two-dimensional unipolar (optical) orthogonal code sets built from 1D codes."""

from ooc2d.codes import (
    CanonicalForm,
    CodeParams,
    MatrixCode,
    OneDimCode,
    canonical_form,
    column_shift,
    dop1d_to_positions,
    dopr_to_wpr,
    format_dopr,
    format_wpr,
    lift_1d_to_2d,
    parse_code,
    positions_to_dop1d,
    row_shift,
    wpr_to_dopr,
)
from ooc2d.correlation import (
    CorrelationProfile,
    auto_profile,
    brute_force_overlap,
    cross_profile,
    intersection_count,
    set_constraints,
)
from ooc2d.errors import DegeneratePairError, MalformedCodeError, OOCError, ParameterError
from ooc2d.generator import enumerate_1d, filter_by_auto, iter_1d, lift_and_expand
from ooc2d.setsearch import (
    CodeSet,
    CompatibilityGraph,
    build_graph,
    enumerate_maximal_cliques,
    johnson_bound,
    maximum_sets,
    run_pipeline,
    verify_set,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CodeParams",
    "CodeSet",
    "CompatibilityGraph",
    "CorrelationProfile",
    "DegeneratePairError",
    "MalformedCodeError",
    "MatrixCode",
    "OOCError",
    "OneDimCode",
    "ParameterError",
    "auto_profile",
    "brute_force_overlap",
    "build_graph",
    "canonical_form",
    "column_shift",
    "cross_profile",
    "dop1d_to_positions",
    "dopr_to_wpr",
    "enumerate_1d",
    "enumerate_maximal_cliques",
    "filter_by_auto",
    "format_dopr",
    "format_wpr",
    "intersection_count",
    "iter_1d",
    "johnson_bound",
    "lift_1d_to_2d",
    "lift_and_expand",
    "maximum_sets",
    "parse_code",
    "positions_to_dop1d",
    "row_shift",
    "run_pipeline",
    "set_constraints",
    "verify_set",
    "wpr_to_dopr",
]
