"""Exact minimum-weight dominating induced matching (DIM) solver and counter."""

from .coloring import Coloring, extract_dim, new_coloring, propagate, validate_total
from .graph import (
    Graph,
    GraphFormatError,
    build_pattern_index,
    connected_components,
    contains_k4,
    format_graph,
    is_dim,
    normalize_weights,
    parse_graph,
    read_graph,
    unshift_weight,
)
from .oracle import brute_force_solve, enumerate_dims
from .search import Solution, branching_factor, solve, solve_connected

__all__ = [
    "Coloring",
    "Graph",
    "GraphFormatError",
    "Solution",
    "branching_factor",
    "brute_force_solve",
    "build_pattern_index",
    "connected_components",
    "contains_k4",
    "enumerate_dims",
    "extract_dim",
    "format_graph",
    "is_dim",
    "new_coloring",
    "normalize_weights",
    "parse_graph",
    "propagate",
    "read_graph",
    "solve",
    "solve_connected",
    "unshift_weight",
    "validate_total",
]

__version__ = "0.1.0"
