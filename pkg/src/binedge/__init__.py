"""Binomial edge ideals of simple graphs and the algebra around them."""

from .closedness import (
    KoszulStatus,
    Reason,
    Verdict,
    check_labeling_closed,
    cone_koszul_classify,
    interval_facets_check,
    is_closed_fast,
    is_closed_search,
    koszul_classify,
)
from .dual import (
    BettiReport,
    NCQuadraticRelation,
    betti2_bruteforce,
    betti_formula,
    dual_generators,
    dual_generators_general,
    verify_orthogonality,
)
from .errors import BinedgeError, CapacityError, DomainError, GraphParseError, PreconditionError
from .graphs import (
    Graph,
    clique_facets,
    cone,
    distances,
    find_claw,
    free_vertices,
    glue_at_free_vertices,
    independence_triangle,
    is_chordal,
    is_narrow,
    parse_graph,
)
from .hilbert import PowerSeries, hilbert_series, series_inverse, series_mul
from .ideal import (
    admissible_paths,
    build_ideal,
    combinatorial_gb,
    nonzerodivisor_check,
    strongly_free_check,
)
from .poly import QQ, PrimeField, Polynomial, buchberger, is_quadratic_basis, reduce

__version__ = "0.1.0"

__all__ = [
    "admissible_paths",
    "betti2_bruteforce",
    "betti_formula",
    "BettiReport",
    "BinedgeError",
    "buchberger",
    "build_ideal",
    "CapacityError",
    "check_labeling_closed",
    "clique_facets",
    "combinatorial_gb",
    "cone",
    "cone_koszul_classify",
    "distances",
    "DomainError",
    "dual_generators",
    "dual_generators_general",
    "find_claw",
    "free_vertices",
    "glue_at_free_vertices",
    "Graph",
    "GraphParseError",
    "hilbert_series",
    "independence_triangle",
    "interval_facets_check",
    "is_chordal",
    "is_closed_fast",
    "is_closed_search",
    "is_narrow",
    "is_quadratic_basis",
    "koszul_classify",
    "KoszulStatus",
    "NCQuadraticRelation",
    "nonzerodivisor_check",
    "parse_graph",
    "Polynomial",
    "PowerSeries",
    "PreconditionError",
    "PrimeField",
    "QQ",
    "Reason",
    "reduce",
    "series_inverse",
    "series_mul",
    "strongly_free_check",
    "Verdict",
    "verify_orthogonality",
]
