"""Exact Laplacian spectra and P4 structure for small simple graphs."""

from .graphs import (
    Graph,
    complement,
    connected_components,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_connected,
    join,
)
from .spectral import (
    ClosedFormSpectrum,
    ExactSpectrum,
    IntPolynomial,
    SurdEigenvalue,
    char_poly,
    check_complement_relation,
    check_union_relation,
    exact_spectrum,
    is_l_integral,
    laplacian,
    numeric_spectrum,
    quotient_matrix,
    thin_spider_closed_form,
)
from .p4 import (
    ClassificationReport,
    SpiderSpec,
    classify,
    enumerate_p4,
    is_cograph,
    is_p4_connected,
    is_p4_extendible,
    is_p4_reducible,
    is_p4_sparse,
    p4_count,
    recognize_spider,
    satisfies_q_t,
)
from .constructions import (
    case_iv_graph,
    case_iv_polynomials,
    enumerate_graphs,
    family,
    head_catalog,
    standard,
    thick_spider,
    thin_spider,
)
from .formats import (
    ParseError,
    load_document,
    parse_edge_list,
    parse_graph6,
    serialize,
    serialize_edge_list,
    serialize_graph6,
)
from .dsl import DslError, parse_dsl
from .theorems import THEOREMS, TheoremResult, verify_theorems

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "complement",
    "connected_components",
    "disjoint_union",
    "from_edge_list",
    "induced_subgraph",
    "is_connected",
    "join",
    "ClosedFormSpectrum",
    "ExactSpectrum",
    "IntPolynomial",
    "SurdEigenvalue",
    "char_poly",
    "check_complement_relation",
    "check_union_relation",
    "exact_spectrum",
    "is_l_integral",
    "laplacian",
    "numeric_spectrum",
    "quotient_matrix",
    "thin_spider_closed_form",
    "ClassificationReport",
    "SpiderSpec",
    "classify",
    "enumerate_p4",
    "is_cograph",
    "is_p4_connected",
    "is_p4_extendible",
    "is_p4_reducible",
    "is_p4_sparse",
    "p4_count",
    "recognize_spider",
    "satisfies_q_t",
    "case_iv_graph",
    "case_iv_polynomials",
    "enumerate_graphs",
    "family",
    "head_catalog",
    "standard",
    "thick_spider",
    "thin_spider",
    "ParseError",
    "load_document",
    "parse_edge_list",
    "parse_graph6",
    "serialize",
    "serialize_edge_list",
    "serialize_graph6",
    "DslError",
    "parse_dsl",
    "THEOREMS",
    "TheoremResult",
    "verify_theorems",
]
