"""Exact engine for matrix-pattern partition problems on small graphs."""

__version__ = "0.1.0"

from .errors import MPartError
from .graph import Graph, from_edges, parse_graph6, to_graph6
from .pattern import PatternMatrix, make_kl_matrix, make_m_kt, parse_matrix
from .solver import PartAssignment, solve, solve_split, validate

__all__ = [
    "Graph",
    "MPartError",
    "PartAssignment",
    "PatternMatrix",
    "__version__",
    "from_edges",
    "make_kl_matrix",
    "make_m_kt",
    "parse_graph6",
    "parse_matrix",
    "solve",
    "solve_split",
    "to_graph6",
    "validate",
]
