"""Hybrid graph coloring: clique lower bounds, low-degree reduction and
core/mixed-degree greedy coloring."""

from ._backend import BACKEND
from .bounds import Clique, exact_lb, find_clique_heuristic, max_clique_exact
from .coloring import Coloring, dsatur, mdd_color, mdd_order, mdd_sort, recolor, verify_coloring
from .graph import (
    Graph,
    WorkingGraph,
    core_decompose,
    load_graph,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    remove_vertices,
    to_dimacs,
)
from .reduce import DeletionStack, extend_coloring, redu_rule
from .solver import SolveResult, SolverConfig, brute_force_chromatic, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Clique",
    "Coloring",
    "DeletionStack",
    "Graph",
    "SolveResult",
    "SolverConfig",
    "WorkingGraph",
    "brute_force_chromatic",
    "core_decompose",
    "dsatur",
    "exact_lb",
    "extend_coloring",
    "find_clique_heuristic",
    "load_graph",
    "max_clique_exact",
    "mdd_color",
    "mdd_order",
    "mdd_sort",
    "parse_dimacs",
    "parse_edgelist",
    "parse_graph",
    "recolor",
    "redu_rule",
    "remove_vertices",
    "solve",
    "to_dimacs",
    "verify_coloring",
]
