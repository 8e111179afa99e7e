"""Exact domination-type invariants of graphs and lexicographic products.

The package computes the domination, total / perfect / Roman / perfect
Roman / total Roman domination, packing and open packing parameters of
small graphs exactly, builds lexicographic products, predicts product
parameters from factor data via a theorem-indexed formula engine, and
verifies every implemented statement by brute force over graph corpora.
"""

__version__ = "0.1.0"

from .errors import (
    CapExceededError,
    DomainError,
    GraphFormatError,
    HypothesisError,
    InconsistencyError,
    LexdomError,
)
from .graph import Graph, RomanAssignment, assignment_from_masks, bits, build_graph, mask_from
from .graphio import (
    GraphFamilySpec,
    generate,
    load_corpus,
    parse_edge_list,
    parse_family,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .product import ProductIndexMap, lex_product
from .solvers import (
    ParameterKind,
    SolveResult,
    enumerate_optimal_v2,
    is_feasible,
    is_prdf,
    is_rdf,
    is_trdf,
    solve,
    zeta,
    zeta_couples,
    zeta_prime,
)
from .structure import (
    HypothesisCheck,
    HypothesisKind,
    check_hypothesis,
    graph_class,
    is_dominating_couple,
    is_efficient_closed_domination,
    is_efficient_open_domination,
)
from .formula import Prediction, TheoremId, construct_witness, predict
from .verify import (
    ClaimRecord,
    CorpusReport,
    VerificationReport,
    check_structural_lemmas,
    verify_corpus,
    verify_pair,
)

__all__ = [
    "CapExceededError", "DomainError", "GraphFormatError", "HypothesisError",
    "InconsistencyError", "LexdomError",
    "Graph", "RomanAssignment", "assignment_from_masks", "bits", "build_graph", "mask_from",
    "GraphFamilySpec", "generate", "load_corpus", "parse_edge_list", "parse_family",
    "parse_graph6", "write_edge_list", "write_graph6",
    "ProductIndexMap", "lex_product",
    "ParameterKind", "SolveResult", "enumerate_optimal_v2", "is_feasible",
    "is_prdf", "is_rdf", "is_trdf", "solve", "zeta", "zeta_couples", "zeta_prime",
    "HypothesisCheck", "HypothesisKind", "check_hypothesis", "graph_class",
    "is_dominating_couple", "is_efficient_closed_domination", "is_efficient_open_domination",
    "Prediction", "TheoremId", "construct_witness", "predict",
    "ClaimRecord", "CorpusReport", "VerificationReport", "check_structural_lemmas",
    "verify_corpus", "verify_pair",
]
