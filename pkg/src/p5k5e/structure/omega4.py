"""Seven-colouring of F1-free atoms with clique number 4.

Dispatch follows the first of F4, F5 and HVN found in the atom. Where the
argument borrows a three-colouring bound from outside, a bounded exact search
realises it.
"""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, bits
from ..patterns import F4, F5, HVN, find_induced
from .common import (
    TriadPartition,
    Workspace,
    bipartition,
    bounded_coloring,
    five_ring_stable_union,
    larger_sides,
    nxt,
    prv,
    require,
    triad_partition,
)


def _pad(classes: list[int], size: int) -> list[int]:
    require(len(classes) <= size, f"needed more than {size} colours")
    return classes + [0] * (size - len(classes))


def _l_without_x(g: Graph, tp: TriadPartition) -> int:
    return sum(1 << t for t in bits(tp.L) if not g.adj[t] & tp.x_all)


def _neighbourhood_classes(g: Graph, v: int) -> list[int]:
    return _pad(bounded_coloring(g, g.adj[v], 3, f"N({v})"), 3)


def _matched_l(g: Graph, d: int, l_all: int, ws: Workspace) -> list[int]:
    """L-part shared by the four-colourings: ``L'`` (seeing ``D``) split into two
    sides, the remainder into three classes."""
    lp = ws.put("L'", sum(1 << t for t in bits(l_all) if g.adj[t] & d))
    lp1, lp2 = bipartition(g, lp, "L'")
    r = _pad(bounded_coloring(g, l_all & ~lp, 3, "L minus L'"), 3)
    return [lp1, lp2, *r]


def four_classes_x_pair(g: Graph, tp: TriadPartition, i: int, ws: Workspace, with_l: bool = True) -> list[int]:
    """Four stable classes covering ``X_{i+1} | X_{i-1} | M | L | {v_i}``.

    ``M`` is ``Y_i`` when both other Y sets are nonempty and empty otherwise.
    """
    up, down = nxt(i), prv(i)
    m = tp.Y[i] if tp.Y[up] and tp.Y[down] else 0
    a, b = {}, {}
    for k in (up, down):
        a[k] = ws.put(f"A{k + 1}", five_ring_stable_union(g, tp.X[k]))
        b[k] = ws.put(f"B{k + 1}", larger_sides(g, tp.X[k] & ~a[k], f"X{k + 1} minus A"))
    d = ws.put("D", larger_sides(g, m, "M"))
    l_all = tp.L if with_l else 0
    lp1, lp2, r1, r2, r3 = _matched_l(g, d, l_all, ws)
    vi = 1 << tp.C[i]
    return [
        (tp.X[up] & ~(a[up] | b[up])) | lp1 | r1,
        (tp.X[down] & ~(a[down] | b[down])) | lp2 | r2,
        a[down] | b[up] | d | r3 | vi,
        a[up] | b[down] | (m & ~d),
    ]


def four_classes_y(g: Graph, tp: TriadPartition, k: int, ws: Workspace) -> list[int]:
    """Four stable classes covering ``Y_k | L | {v_k}``."""
    d = ws.put("D", larger_sides(g, tp.Y[k], f"Y{k + 1}"))
    lp1, lp2, r1, r2, r3 = _matched_l(g, d, tp.L, ws)
    return [lp1 | r1, lp2 | r2, d | r3 | (1 << tp.C[k]), tp.Y[k] & ~d]


def seven_via_complete_x(g: Graph, tp: TriadPartition, ws: Workspace) -> list[int]:
    """X_1, X_2, X_3 and the X-touching part of L are mutually complete."""
    l1 = ws.put("L1", _l_without_x(g, tp))
    yz = _pad(bounded_coloring(g, tp.y_all | tp.Z, 3, "Y with Z"), 3)
    v1, v2, v3 = tp.C
    parts = (
        (tp.X[0], v2),
        (tp.X[1] | tp.X[2], v1),
        (tp.L & ~l1, v3),
    )
    cxl: list[int] = []
    for part, v in parts:
        side_a, side_b = bipartition(g, part | (1 << v), "part of X or L")
        cxl.extend(c for c in (side_a, side_b) if c)
    require(len(cxl) <= 4, "C, X and L minus L1 need more than four colours")
    cxl = _pad(cxl, 4)
    for j, cls in enumerate(bounded_coloring(g, l1, 3, "L1")):
        cxl[j] |= cls
    return yz + cxl


def _f4_case(g: Graph, emb: tuple[int, ...], trace) -> Coloring:
    tp = triad_partition(g, emb[:3])
    require(tp.Z == 1 << emb[3], "omega=4: Z is not {z*}")
    l1 = _l_without_x(g, tp)
    if tp.L == l1:
        ws = Workspace("omega=4/F4/L-misses-X", trace=trace)
        ws.add(*_neighbourhood_classes(g, tp.C[0]), *four_classes_x_pair(g, tp, 0, ws))
        return ws.emit(g)
    for i in range(3):
        if tp.X[i] and tp.X[nxt(i)]:
            ws = Workspace("omega=4/F4/complete-x", trace=trace)
            ws.add(*seven_via_complete_x(g, tp, ws))
            return ws.emit(g)
    k = next((k for k in range(3) if not tp.X[nxt(k)] | tp.X[prv(k)]), None)
    require(k is not None, "omega=4/F4: no index with both other X sets empty")
    ws = Workspace("omega=4/F4/y-part", trace=trace)
    ws.add(*_neighbourhood_classes(g, tp.C[k]), *four_classes_y(g, tp, k, ws))
    return ws.emit(g)


def _f5_case(g: Graph, emb: tuple[int, ...], trace) -> Coloring:
    tp = triad_partition(g, emb[:3])
    zs = emb[3]
    require(tp.Z == 1 << zs, "omega=4: Z is not {z*}")
    if tp.L & ~_l_without_x(g, tp):
        ws = Workspace("omega=4/F5/complete-x", trace=trace)
        ws.add(*seven_via_complete_x(g, tp, ws))
        return ws.emit(g)
    if g.neighborhood(tp.X[0] | tp.X[2]) & tp.Y[1]:
        ws = Workspace("omega=4/F5/x-meets-y2", trace=trace)
        ws.add(*_neighbourhood_classes(g, tp.C[2]), *four_classes_x_pair(g, tp, 2, ws))
        return ws.emit(g)
    ws = Workspace("omega=4/F5/x-misses-y2", trace=trace)
    classes = four_classes_x_pair(g, tp, 1, ws, with_l=False)
    ya, yb = bipartition(g, tp.Y[1], "Y2")
    classes[0] |= ya
    classes[1] |= yb
    classes[3] |= 1 << zs
    rest = (g.adj[tp.C[1]] & ~(1 << zs)) | tp.L
    ws.add(*classes, *_pad(bounded_coloring(g, rest, 3, "N(v2) minus z* with L"), 3))
    return ws.emit(g)


def _hvn_case(g: Graph, emb: tuple[int, ...], trace) -> Coloring:
    tp = triad_partition(g, emb[:3])
    zs = emb[3]
    require(tp.Z == 1 << zs, "omega=4: Z is not {z*}")
    x1, y1 = tp.X[0], tp.Y[0]
    ws = Workspace("omega=4/HVN", trace=trace)
    cl = _pad(bounded_coloring(g, tp.L, 3, "L"), 3)
    ws.add(*(cls | (1 << v) for cls, v in zip(cl, tp.C)))
    if g.adj[zs] & x1:
        ws.branch = "omega=4/HVN/z-sees-x1"
        xa, xb = bipartition(g, x1, "X1")
        ya, yb = bipartition(g, y1, "Y1")
        ws.add(xa, xb, ya | (1 << zs), yb)
        return ws.emit(g)
    ws.branch = "omega=4/HVN/z-misses-x1"
    d = ws.put("D", larger_sides(g, y1, "Y1"))
    x1p = ws.put("X1'", sum(1 << x for x in bits(x1) if g.adj[x] & d))
    xa, xb = bipartition(g, x1p, "X1'")
    r = _pad(bounded_coloring(g, x1 & ~x1p, 3, "X1 minus X1'"), 3)
    ws.add(d | r[0], xa | r[1], xb | r[2], (y1 & ~d) | (1 << zs))
    return ws.emit(g)


def color_w4_ffree(g: Graph, trace: list[str] | None = None) -> Coloring:
    emb = find_induced(g, F4)
    if emb is not None:
        return _f4_case(g, emb, trace)
    emb = find_induced(g, F5)
    if emb is not None:
        return _f5_case(g, emb, trace)
    emb = find_induced(g, HVN)
    require(emb is not None, "omega=4: no HVN in a non-co-bipartite atom")
    return _hvn_case(g, emb, trace)
