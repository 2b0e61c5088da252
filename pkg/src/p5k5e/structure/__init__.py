"""Structural colouring of (P5, K5-e)-free graphs."""

from .claims import validate_triad_claims
from .cobipartite import cobipartite_coloring, is_cobipartite
from .common import NotATriangle, OutOfClass, StructuralViolation, TriadPartition, triad_partition
from .f1 import color_with_f1
from .f2 import color_with_f2
from .f3 import color_with_f3
from .omega4 import color_w4_ffree
from .omega5 import color_w5_ffree
from .pipeline import (
    PipelineResult,
    color_atom,
    color_bound,
    color_connected,
    color_connected_report,
    color_graph,
    color_graph_report,
)

__all__ = [
    "NotATriangle",
    "OutOfClass",
    "PipelineResult",
    "StructuralViolation",
    "TriadPartition",
    "cobipartite_coloring",
    "color_atom",
    "color_bound",
    "color_connected",
    "color_connected_report",
    "color_graph",
    "color_graph_report",
    "color_w4_ffree",
    "color_w5_ffree",
    "color_with_f1",
    "color_with_f2",
    "color_with_f3",
    "is_cobipartite",
    "triad_partition",
    "validate_triad_claims",
]
