"""Five-colouring of F1-free atoms that contain F2."""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph
from ..patterns import F2
from .common import (
    Workspace,
    bipartition,
    five_ring_stable_union,
    greedy_maximal_stable,
    larger_sides,
    require,
    triad_partition,
)


def _swap_2_3(emb: tuple[int, ...]) -> tuple[int, ...]:
    v1, v2, v3, y2, y3, z1, z2 = emb
    return (v1, v3, v2, y3, y2, z1, z2)


def color_with_f2(g: Graph, emb: tuple[int, ...], trace: list[str] | None = None) -> Coloring:
    """``emb`` follows the F2 order ``(v1, v2, v3, y2, y3, z1, z2)``."""
    require(F2.is_embedding(g, emb), "F2 embedding is not induced")
    tp = triad_partition(g, emb[:3])
    if g.neighborhood(tp.L) & tp.x_all and tp.X[0] | tp.X[2] | tp.Y[0]:
        # L touches X: orient so that X1, X3 and Y1 are empty
        if not tp.X[0] | tp.X[1] | tp.Y[0]:
            emb = _swap_2_3(emb)
            tp = triad_partition(g, emb[:3])
        require(not tp.X[0] | tp.X[2] | tp.Y[0], "F2: L meets X but no orientation empties X1, X3, Y1")
    v1, v2, v3, _, _, z1, z2 = emb
    X, Y, Z, L = tp.X, tp.Y, tp.Z, tp.L
    ws = Workspace("F2", trace=trace)
    require(Z == (1 << z1) | (1 << z2), "F2: Z is not {z1, z2}")

    l1, l2 = bipartition(g, L, "L")
    ws.put("L1", l1)
    ws.put("L2", l2)
    A, B, Xr, Yp = [], [], [], []
    for i in range(3):
        a = ws.put(f"A{i + 1}", five_ring_stable_union(g, X[i]))
        b = ws.put(f"B{i + 1}", larger_sides(g, X[i] & ~a, f"X{i + 1} minus A{i + 1}"))
        A.append(a)
        B.append(b)
        Xr.append(ws.put(f"X{i + 1}'", X[i] & ~(a | b)))
        Yp.append(ws.put(f"Y{i + 1}'", greedy_maximal_stable(g, Y[i])))

    ws.add(
        Xr[1] | B[2] | Yp[0] | (1 << v1),
        B[0] | Xr[2] | l2 | (1 << v2),
        Xr[0] | B[1] | l1 | (1 << v3),
        A[0] | A[2] | Yp[1] | (Y[0] & ~Yp[0]) | (Y[2] & ~Yp[2]) | (1 << z1),
        A[1] | (Y[1] & ~Yp[1]) | Yp[2] | (1 << z2),
    )
    return ws.emit(g)
