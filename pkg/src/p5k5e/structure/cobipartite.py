"""Optimal colouring of graphs whose complement is bipartite."""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, bipartite_analysis, bits, complement


def cobipartite_coloring(g: Graph) -> Coloring | None:
    """Colour classes are the edges of a maximum matching of the complement
    plus singletons, giving ``n - matching`` colours; ``None`` unless the
    complement is bipartite."""
    co = complement(g)
    analysis = bipartite_analysis(co)
    if analysis is None:
        return None
    matched = 0
    classes = []
    for u, w in analysis.matching:
        classes.append((1 << u) | (1 << w))
        matched |= (1 << u) | (1 << w)
    classes.extend(1 << v for v in bits(g.vertices & ~matched))
    return Coloring.from_classes(g.n, classes).check(g)


def is_cobipartite(g: Graph) -> bool:
    return bipartite_analysis(complement(g)) is not None
