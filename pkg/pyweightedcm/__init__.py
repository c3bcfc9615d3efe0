"""init weighted edge ideal toolkit."""
from .constants import CrossValidationMode, DeleteMode, Force, GeneratorKind, Verdict
from .covers import (
    WeightedCover,
    irreducible_decomposition,
    is_unmixed,
    is_weighted_cover,
    minimal_support_covers,
    minimal_weighted_covers,
)
from .exceptions import BudgetExceededError, GraphDocumentError, WeightedCMError
from .generator import generate
from .graph import WeightedGraph, load_graph, parse_graph, serialize_graph
from .ideals import Monomial, MonomialIdeal, polarize, weighted_edge_ideal
from .oracle import SimplicialComplex, is_cm_ideal, is_cm_oracle, reisner_is_cm
from .structure import classify_pc, girth, is_vertex_decomposable, is_well_covered
from .weights import balanced_vertices, check_weight_conditions, classify_cm

__all__ = [
    "BudgetExceededError",
    "CrossValidationMode",
    "DeleteMode",
    "Force",
    "GeneratorKind",
    "GraphDocumentError",
    "Monomial",
    "MonomialIdeal",
    "SimplicialComplex",
    "Verdict",
    "WeightedCMError",
    "WeightedCover",
    "WeightedGraph",
    "balanced_vertices",
    "check_weight_conditions",
    "classify_cm",
    "classify_pc",
    "generate",
    "girth",
    "irreducible_decomposition",
    "is_cm_ideal",
    "is_cm_oracle",
    "is_unmixed",
    "is_vertex_decomposable",
    "is_weighted_cover",
    "is_well_covered",
    "load_graph",
    "minimal_support_covers",
    "minimal_weighted_covers",
    "parse_graph",
    "polarize",
    "reisner_is_cm",
    "serialize_graph",
    "weighted_edge_ideal",
]
