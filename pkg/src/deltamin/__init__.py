"""Exact parsimonious edge-colouring of graphs with maximum degree 3.

Computes s(G), the least number of edges that must take a fourth colour in a
proper edge-colouring, the ratio gamma(G) = 1 - s(G)/m, the structure of
optimal colourings, 2-factor invariants and lower bounds, and graph
constructions (reductions, dot products).
"""

from __future__ import annotations

from .colouring import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    BudgetExceeded,
    Classification,
    Colour,
    EdgeColouring,
    InvariantViolation,
    KempeComponent,
    classify,
    decide_three_colourable,
    delta_class,
    kempe_component_at,
    kempe_components,
    kempe_swap,
    repair_delta_improper,
)
from .constructions import dot_product, g5, make_named, p_prime, petersen, petersen_chain, reduce_all, reduce_triangle, remove_pendant
from .factors import Extremal, MetricsReport, bound_suite, enumerate_two_factors, extremal_recognize, g_plus, odd_girth, oddness
from .graph import Graph, GraphError, are_isomorphic, build_graph, edge, induced_edge_count
from .graph6 import emit_graph6, parse_graph6
from .kernel import BACKEND
from .report import Report
from .smin import SminResult, gamma, s_exact, s_upper_from_vertices
from .structure import (
    CheckResult,
    DeltaClassPartition,
    OddCycleCertificate,
    classify_delta_edges,
    independent_cover,
    payan_strong_matching,
    rotate_delta_edge,
    verify_same_set_trichotomy,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
