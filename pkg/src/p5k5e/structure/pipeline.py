"""End-to-end colouring of connected (P5, K5-e)-free graphs.

Each atom of the clique-cutset decomposition is coloured by the first
applicable procedure, and the atom colourings are glued along the cutsets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..coloring import Coloring
from ..decompose import Disconnected, atom_decomposition, merge_colorings
from ..graph import Graph, clique_number, connected_components, is_connected
from ..patterns import F1, F2, F3, find_induced, in_class
from .cobipartite import cobipartite_coloring
from .common import OutOfClass, StructuralViolation, bounded_coloring
from .f1 import color_with_f1
from .f2 import color_with_f2
from .f3 import color_with_f3
from .omega4 import color_w4_ffree
from .omega5 import color_w5_ffree

SMALL_OMEGA_CAP = 5
FALLBACK_FLOOR = 7


def color_bound(omega: int) -> int:
    """Colours the pipeline may use on a graph with clique number ``omega``."""
    return max(FALLBACK_FLOOR, omega)


@dataclass
class PipelineResult:
    coloring: Coloring
    branches: list[str] = field(default_factory=list)
    fallbacks: list[str] = field(default_factory=list)

    @property
    def histogram(self) -> Counter:
        return Counter(self.branches)


def color_atom(h: Graph, trace: list[str] | None = None) -> Coloring:
    """Colour one atom, raising :class:`StructuralViolation` if a structural step fails."""
    trace = [] if trace is None else trace
    col = cobipartite_coloring(h)
    if col is not None:
        trace.append("cobipartite")
        return col
    omega = clique_number(h)
    if omega <= 3:
        classes = bounded_coloring(h, h.vertices, SMALL_OMEGA_CAP, "atom with omega<=3")
        trace.append("omega<=3")
        return Coloring.from_classes(h.n, classes)
    for pattern, proc in ((F1, color_with_f1), (F2, color_with_f2), (F3, color_with_f3)):
        emb = find_induced(h, pattern)
        if emb is not None:
            return proc(h, emb, trace)
    if omega >= 5:
        return color_w5_ffree(h, trace)
    return color_w4_ffree(h, trace)


def color_connected_report(g: Graph) -> PipelineResult:
    ok, name, witness = in_class(g)
    if not ok:
        raise OutOfClass(name, witness)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    tree = atom_decomposition(g)
    result_branches: list[str] = []
    fallbacks: list[str] = []
    atom_colorings = []
    for atom in tree.atoms:
        h = atom.graph
        try:
            col = color_atom(h, result_branches)
        except StructuralViolation as exc:
            fallbacks.append(str(exc))
            result_branches.append("fallback")
            cap = color_bound(clique_number(h))
            col = Coloring.from_classes(h.n, bounded_coloring(h, h.vertices, cap, "fallback"))
        atom_colorings.append(col)
    merged = merge_colorings(tree, atom_colorings)
    merged.check(g)
    return PipelineResult(merged, result_branches, fallbacks)


def color_connected(g: Graph) -> Coloring:
    return color_connected_report(g).coloring


def color_graph_report(g: Graph) -> PipelineResult:
    """Colour each component separately and reuse colours across components."""
    if g.n == 0:
        return PipelineResult(Coloring((), 0))
    colors = [0] * g.n
    branches: list[str] = []
    fallbacks: list[str] = []
    for comp in connected_components(g):
        h, verts = g.induced(comp)
        part = color_connected_report(h)
        branches += part.branches
        fallbacks += part.fallbacks
        for local, v in enumerate(verts):
            colors[v] = part.coloring.colors[local]
    return PipelineResult(Coloring.from_assignment(colors), branches, fallbacks)


def color_graph(g: Graph) -> Coloring:
    return color_graph_report(g).coloring
