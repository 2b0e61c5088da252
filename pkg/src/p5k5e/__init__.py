"""Colouring (P5, K5-e)-free graphs with at most max(7, omega) colours.

Bitset graphs, induced-pattern detection, clique-cutset decomposition,
structural colouring procedures, an independent exact colouring oracle and a
small-graph census that checks them against each other.
"""

from .coloring import Coloring, ImproperColoring
from .decompose import Disconnected, atom_decomposition, find_clique_cutset, merge_colorings
from .graph import Graph, GraphError, clique_number, parse_edge_list, parse_graph6, to_graph6
from .oracle import chromatic_number, is_k_colorable
from .patterns import in_class, is_in_class, is_perfect
from .structure import OutOfClass, StructuralViolation, color_connected, color_graph

__all__ = [
    "Coloring",
    "Disconnected",
    "Graph",
    "GraphError",
    "ImproperColoring",
    "OutOfClass",
    "StructuralViolation",
    "atom_decomposition",
    "chromatic_number",
    "clique_number",
    "color_connected",
    "color_graph",
    "find_clique_cutset",
    "in_class",
    "is_in_class",
    "is_k_colorable",
    "is_perfect",
    "merge_colorings",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
]
