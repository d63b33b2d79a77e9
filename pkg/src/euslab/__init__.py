"""Euler Sombor index toolkit: indices, extremal families, bounds and brute-force checks."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, empty_graph, girth, is_connected, is_unicyclic, pendant_count
from .indices import EPS, IndexKind, edge_weight, index_value

__all__ = [
    "EPS",
    "Graph",
    "GraphError",
    "IndexKind",
    "edge_weight",
    "empty_graph",
    "girth",
    "index_value",
    "is_connected",
    "is_unicyclic",
    "pendant_count",
]
