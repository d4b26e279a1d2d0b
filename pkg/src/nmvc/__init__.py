"""Approximate N-distance minimal vertex covers via trail-based graph reduction."""

from .cover import CoverSolution, approx_vertex_cover, repair, solve_nmvc, verify_cover
from .extension import ExtendedGraph, MatchingReport, extend_graph, matching_report
from .graph import Graph, GraphError, distance, edge, greedy_maximal_matching, vertices_within
from .oracle import OracleResult, exact_nmvc, exact_vc
from .reduction import ReductionEvent, ReductionState, attachment_sets, reduce, reduce_once
from .rng import RandomSource
from .trails import Trail, find_n_trail, n_trail_exists

__version__ = "0.1.0"
