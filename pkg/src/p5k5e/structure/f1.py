"""Five-colouring of atoms that contain F1."""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, connected_components
from ..patterns import F1
from .common import Workspace, bipartition, require, triad_partition


def _swap_2_3(emb: tuple[int, ...]) -> tuple[int, ...]:
    v1, v2, v3, x1, y2, y3, z = emb
    return (v1, v3, v2, x1, y3, y2, z)


def color_with_f1(g: Graph, emb: tuple[int, ...], trace: list[str] | None = None) -> Coloring:
    """``emb`` follows the F1 order ``(v1, v2, v3, x1, y2, y3, z)``."""
    require(F1.is_embedding(g, emb), "F1 embedding is not induced")
    v1, v2, v3, x1, y2, y3, z = emb
    tp = triad_partition(g, (v1, v2, v3))
    if not g.adj[z] & tp.X[1] and g.adj[z] & tp.X[2]:
        emb = _swap_2_3(emb)
        v1, v2, v3, x1, y2, y3, z = emb
        tp = triad_partition(g, (v1, v2, v3))
    X, Y, Z, L = tp.X, tp.Y, tp.Z, tp.L
    zb = 1 << z
    ws = Workspace("F1", trace=trace)

    require(L == 0, "F1: L is not empty")
    require(X[0] == 1 << x1, "F1: X1 is not {x1}")
    require(Y == (0, 1 << y2, 1 << y3), "F1: Y is not {y2, y3}")
    require((Z & ~zb).bit_count() <= 1, "F1: more than one vertex in Z besides z")
    require(g.adj[z] & X[1] in (0, X[1]), "F1: z is mixed on X2")

    halves = {}
    for j in (1, 2):
        for comp in connected_components(g, X[j]):
            require(comp.bit_count() <= 2, f"F1: X{j + 1} has a component larger than K2")
        b, a = bipartition(g, X[j], f"X{j + 1}")
        halves[j] = (ws.put(f"A{j + 1}", a), ws.put(f"B{j + 1}", b))
    (a2, b2), (a3, b3) = halves[1], halves[2]

    ws.add(
        a2 | (Z & ~zb) | (1 << y3),
        b2 | (1 << v3),
        (1 << x1) | zb,
        a3 | (1 << y2) | (1 << v2),
        b3 | (1 << v1),
    )
    return ws.emit(g)
