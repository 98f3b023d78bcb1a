"""Anti-Ramsey numbers for graphs with small components.

Closed-form values and bounds (exact rationals), the q_j cover parameter,
the extremal rainbow-free colorings, a complete rainbow-copy search, and an
exhaustive small-n oracle - each cross-validating the others.
"""

from .colorings import (
    EdgeColoring,
    all_distinct,
    all_edges,
    edge_index,
    monochromatic,
    parse_coloring,
    serialize_coloring,
)
from .constructions import clique_coloring, color_count, cover_coloring
from .formulas import (
    BoundReport,
    TransferBound,
    TransferParams,
    UnrecognizedFamilyError,
    ar_cycle,
    ar_family,
    ar_matching,
    ar_path,
    cover_lower_bound,
    cycle_matching_bounds,
    integer_bounds,
    linear_form,
    matching_step_threshold,
    path_matching_bounds,
    transfer_upper_bound,
    triples_gamma,
    triples_step_threshold,
)
from .graphs import (
    Custom,
    Cycle,
    Graph,
    Matching,
    Path,
    PatternSpec,
    TriplePath,
    Union,
    build_pattern,
    degree_profile,
    disjoint_union,
    family_name,
    parse_family,
    parse_graph,
    serialize_graph,
)
from .oracle import (
    OracleInconclusive,
    OracleResult,
    RangeReport,
    RangeRow,
    exact_ar,
    max_rainbow_free,
    verify_range,
)
from .qcover import QResult, cover_by_counting, q_cover, q_union_matching
from .rainbow import Embedding, check_embedding, find_rainbow, is_rainbow_free

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "Custom", "Cycle", "EdgeColoring", "Embedding", "Graph",
    "Matching", "OracleInconclusive", "OracleResult", "Path", "PatternSpec",
    "QResult", "RangeReport", "RangeRow", "TransferBound", "TransferParams",
    "TriplePath", "Union", "UnrecognizedFamilyError",
    "all_distinct", "all_edges", "ar_cycle", "ar_family", "ar_matching",
    "ar_path", "build_pattern", "check_embedding", "clique_coloring",
    "color_count", "cover_by_counting", "cover_coloring", "cover_lower_bound",
    "cycle_matching_bounds", "degree_profile", "disjoint_union", "edge_index",
    "exact_ar", "family_name", "find_rainbow", "integer_bounds",
    "is_rainbow_free", "linear_form", "matching_step_threshold",
    "max_rainbow_free", "monochromatic", "parse_coloring", "parse_family",
    "parse_graph", "path_matching_bounds", "q_cover", "q_union_matching",
    "serialize_coloring", "serialize_graph", "transfer_upper_bound",
    "triples_gamma", "triples_step_threshold", "verify_range",
]
