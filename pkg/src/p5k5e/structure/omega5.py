"""Six-colouring of (F1, F2, F3)-free atoms with clique number at least 5."""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, bits
from ..patterns import find_induced, h_t
from .common import (
    Workspace,
    bipartition,
    five_ring_stable_union,
    greedy_maximal_stable,
    require,
    triad_partition,
)


def color_w5_ffree(g: Graph, trace: list[str] | None = None) -> Coloring:
    emb = find_induced(g, h_t(2))
    require(emb is not None, "omega>=5: no H2 in a non-co-bipartite atom")
    v1, v2, v3, za, zb, _ = emb
    tp = triad_partition(g, (v1, v2, v3))
    X, Y, Z, L = tp.X, tp.Y, tp.Z, tp.L
    ws = Workspace("omega>=5", trace=trace)
    require(not Y[1] | Y[2], "omega>=5: Y2 or Y3 is not empty")
    require(not X[1] | X[2], "omega>=5: X2 or X3 is not empty")
    z1_set = ws.put("Z1", sum(1 << z for z in bits(Z) if not g.adj[z] & X[0]))
    z1 = za if z1_set >> za & 1 else zb
    require(z1_set >> z1 & 1, "omega>=5: neither clique vertex outside C lies in Z1")

    a = ws.put("A", five_ring_stable_union(g, X[0]))
    b = ws.put("B", five_ring_stable_union(g, L))
    y1p = ws.put("Y1'", greedy_maximal_stable(g, Y[0]))
    ws.add(a | b | (Y[0] & ~y1p) | (z1_set & ~(1 << z1)))
    ws.add(*bipartition(g, (X[0] & ~a) | (1 << z1) | (1 << v2), "X1 minus A with z1, v2"))
    ws.add(*bipartition(g, (L & ~b) | (1 << v1) | (1 << v3), "L minus B with v1, v3"))
    ws.add(y1p | (Z & ~z1_set))
    return ws.emit(g)
