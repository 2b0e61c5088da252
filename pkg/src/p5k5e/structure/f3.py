"""Five-colouring of (F1, F2)-free atoms that contain F3."""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph
from ..patterns import F3
from .common import (
    Workspace,
    bipartition,
    bounded_coloring,
    five_ring_stable_union,
    greedy_maximal_stable,
    nxt,
    prv,
    require,
    triad_partition,
)


def _swap_2_3(emb: tuple[int, ...]) -> tuple[int, ...]:
    v1, v2, v3, y2, y3, z1, z2 = emb
    return (v1, v3, v2, y3, y2, z1, z2)


def _swap_z(emb: tuple[int, ...]) -> tuple[int, ...]:
    v1, v2, v3, y2, y3, z1, z2 = emb
    return (v1, v2, v3, y2, y3, z2, z1)


def _two_classes(g: Graph, mask: int, what: str) -> tuple[int, int]:
    return bipartition(g, mask, what)


def color_with_f3(g: Graph, emb: tuple[int, ...], trace: list[str] | None = None) -> Coloring:
    """``emb`` follows the F3 order ``(v1, v2, v3, y2, y3, z1, z2)``."""
    require(F3.is_embedding(g, emb), "F3 embedding is not induced")
    tp = triad_partition(g, emb[:3])
    X, Y = tp.X, tp.Y
    crossing = [bool(g.neighborhood(X[i]) & (Y[nxt(i)] | Y[prv(i)])) for i in range(3)]
    if any(crossing):
        return _x_meets_other_y(g, emb, tp, crossing, trace)
    for j in range(3):
        if not X[nxt(j)] | X[prv(j)]:
            return _two_x_empty(g, emb, tp, j, trace)
    return _main_branch(g, emb, tp, trace)


def _x_meets_other_y(g: Graph, emb, tp, crossing, trace) -> Coloring:
    """Some X_i sees the other Y sets; orient it to X2 and split C+L from the rest."""
    if not crossing[1]:
        require(crossing[2], "F3: only X1 meets the other Y sets")
        emb = _swap_2_3(emb)
        tp = triad_partition(g, emb[:3])
    ws = Workspace("F3/x-meets-y", trace=trace)
    rest = tp.x_all | tp.y_all | tp.Z
    require(not tp.X[0] | tp.X[2] | tp.Y[0], "F3: X1, X3 or Y1 nonempty when X2 meets Y3")
    a, b = _two_classes(g, rest, "X with Y and Z")
    ws.put("XYZ", rest)
    # C + L in three colours, one vertex of C per class
    l_classes = bounded_coloring(g, tp.L, 3, "L")
    ws.put("L", tp.L)
    require(len(l_classes) <= 3, "F3: L needs more than three colours")
    l_classes += [0] * (3 - len(l_classes))
    ws.add(a, b, *(cls | (1 << v) for cls, v in zip(l_classes, tp.C)))
    return ws.emit(g)


def _two_x_empty(g: Graph, emb, tp, j: int, trace) -> Coloring:
    """X_{j+1} and X_{j-1} are empty."""
    ws = Workspace("F3/two-x-empty", trace=trace)
    z1, z2 = emb[5], emb[6]
    require(tp.Z == (1 << z1) | (1 << z2), "F3: Z is not {z1, z2}")
    xj = tp.X[j]
    s = ws.put("S", five_ring_stable_union(g, xj))
    yp = [ws.put(f"Y{i + 1}'", greedy_maximal_stable(g, tp.Y[i])) for i in range(3)]
    yp_all = yp[0] | yp[1] | yp[2]
    c = tp.C
    mixed = (xj & ~s) | tp.L | (1 << c[nxt(j)]) | (1 << c[prv(j)])
    a, b = _two_classes(g, mixed, "X_j minus S with L")
    ws.add(
        a,
        b,
        s | (tp.y_all & ~yp_all) | (1 << z1),
        yp_all | (1 << z2),
        1 << c[j],
    )
    return ws.emit(g)


def _main_branch(g: Graph, emb, tp, trace) -> Coloring:
    X = tp.X
    # orient so that z1 is complete to X2
    z1 = emb[5]
    if g.adj[z1] & X[1] != X[1]:
        emb = _swap_z(emb)
    v1, v2, v3, _, _, z1, z2 = emb
    require(g.adj[z1] & X[1] == X[1] and X[1], "F3: neither z vertex is complete to X2")
    ws = Workspace("F3/main", trace=trace)
    require(tp.Z == (1 << z1) | (1 << z2), "F3: Z is not {z1, z2}")
    require(tp.Y[0] == 0, "F3: Y1 is not empty")
    m = ws.put("M", sum(1 << x for x in range(g.n) if X[0] >> x & 1 and g.adj[x] & X[1]))
    if X[0]:
        ws.branch = "F3/main/x1-nonempty"
        require(tp.L == 0, "F3: L is not empty while X1 is nonempty")
        first = m | X[2] | tp.Y[1] | (1 << v2) | (1 << z1)
        second = (X[0] & ~m) | X[1] | tp.Y[2] | (1 << v3) | (1 << z2)
        ws.add(*_two_classes(g, first, "M with X3, Y2"))
        ws.add(*_two_classes(g, second, "X1 minus M with X2, Y3"))
        ws.add(1 << v1)
        return ws.emit(g)
    ws.branch = "F3/main/x1-empty"
    xp = {k: ws.put(f"X{k + 1}'", _side(g, X[k], f"X{k + 1}")) for k in (1, 2)}
    yp = {k: ws.put(f"Y{k + 1}'", _side(g, tp.Y[k], f"Y{k + 1}")) for k in (1, 2)}
    lp = ws.put("L'", _side(g, tp.L, "L"))
    ws.add(
        xp[1] | yp[2] | (1 << z2),
        xp[2] | yp[1] | (1 << v2),
        (X[1] & ~xp[1]) | lp | (1 << v3),
        (X[2] & ~xp[2]) | (tp.L & ~lp) | (1 << v1),
        (tp.Y[1] & ~yp[1]) | (tp.Y[2] & ~yp[2]) | (1 << z1),
    )
    return ws.emit(g)


def _side(g: Graph, mask: int, what: str) -> int:
    # a maximal stable set whose complement in the bipartite set is also stable
    return bipartition(g, mask, what)[0]
