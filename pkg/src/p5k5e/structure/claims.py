"""Executable forms of the basic facts about a triad partition.

Each check returns human-readable violation strings; an in-class graph must
produce none. Each message starts with a bracketed tag naming the check.
"""

from __future__ import annotations

from ..graph import Graph, bits, connected_components
from ..patterns import F1, find_induced, in_class
from .common import OutOfClass, TriadPartition, nxt, prv


def _sees(g: Graph, v: int, mask: int) -> int:
    return g.adj[v] & mask


def _is_p3_free(g: Graph, mask: int) -> bool:
    return all(g.is_clique(c) for c in connected_components(g, mask))


def _complete(g: Graph, a: int, b: int) -> bool:
    return all(_sees(g, v, b) == b for v in bits(a))


def _anticomplete(g: Graph, a: int, b: int) -> bool:
    return all(not _sees(g, v, b) for v in bits(a))


def validate_triad_claims(g: Graph, tp: TriadPartition) -> list[str]:
    ok, name, witness = in_class(g)
    if not ok:
        raise OutOfClass(name, witness)
    out: list[str] = []
    X, Y, Z, L = tp.X, tp.Y, tp.Z, tp.L

    if not g.is_clique(tp.c_mask | Z):
        out.append("[clique] C with Z is not a clique")

    for i in range(3):
        if not _is_p3_free(g, Y[i]):
            out.append(f"[Y] G[Y{i + 1}] contains a P3")
    if not _anticomplete(g, tp.y_all, Z):
        out.append("[Y] Y is not anticomplete to Z")

    for i in range(3):
        for j, k in ((nxt(i), prv(i)), (prv(i), nxt(i))):
            outside = X[j] | Y[k]
            for comp in connected_components(g, X[i] | L):
                for r in bits(outside):
                    seen = _sees(g, r, comp)
                    if seen and seen != comp:
                        out.append(f"[homogeneous] component {list(bits(comp))} of X{i + 1}+L is split by {r}")

    for x in bits(tp.x_all):
        if _sees(g, x, Z).bit_count() > 1:
            out.append(f"[X-Z] X-vertex {x} has two neighbours in Z")

    for i in range(3):
        others = X[nxt(i)] | X[prv(i)]
        for t in bits(L):
            if _sees(g, t, X[i]):
                if _sees(g, t, others) != others:
                    out.append(f"[L-X] L-vertex {t} sees X{i + 1} but misses part of the other X sets")
                if not _complete(g, X[i], others):
                    out.append(f"[L-X] L-vertex {t} sees X{i + 1} but X{i + 1} is not complete to the rest of X")

    if Z:
        for i in range(3):
            for comp in connected_components(g, Y[i]):
                if comp & (comp - 1) and not _anticomplete(g, comp, Y[nxt(i)] | Y[prv(i)]):
                    out.append(f"[big-Y] big component of Y{i + 1} touches another Y set")

    for t in bits(L):
        if _sees(g, t, Z).bit_count() > 2:
            out.append(f"[L-Z] L-vertex {t} has three neighbours in Z")

    for i in range(3):
        for j in (nxt(i), prv(i)):
            for p in bits(X[i] | Y[j]):
                for q in bits(X[j] | Y[i]):
                    if p == q:
                        continue
                    pq = g.has_edge(p, q)
                    for t in bits(_sees(g, p, L)):
                        qt = g.has_edge(q, t)
                        if not pq and not qt:
                            out.append(f"[pq-qt] p={p}, q={q}, t={t}: neither pq nor qt")
                        if pq and qt:
                            continue
                        for z in bits(Z):
                            if not (g.has_edge(p, z) or g.has_edge(q, z) or g.has_edge(t, z)):
                                out.append(f"[pq-qt] p={p}, q={q}, t={t}, z={z}: pq and qt not both edges")
                                break

    for i in range(3):
        for r in connected_components(g, X[i]):
            if not any(not _sees(g, z, r) for z in bits(Z)):
                continue
            for s in connected_components(g, Y[i]):
                if not (_complete(g, s, r) or _anticomplete(g, s, r)):
                    out.append(f"[X-Y components] Y{i + 1} component {list(bits(s))} is mixed on X{i + 1} component")
                elif s & (s - 1) and not _anticomplete(g, s, r) and not g.is_clique(r):
                    out.append(f"[X-Y components] X{i + 1} component {list(bits(r))} contains a P3")

    if find_induced(g, F1) is None:
        for i in range(3):
            if not (Y[nxt(i)] | Y[prv(i)]):
                continue
            for q in connected_components(g, X[i]):
                for z in bits(Z):
                    seen = _sees(g, z, q)
                    if seen and seen != q:
                        out.append(f"[Z-X components] z={z} is mixed on X{i + 1} component {list(bits(q))}")
                    elif seen and not g.is_clique(q):
                        out.append(f"[Z-X components] X{i + 1} component {list(bits(q))} seen from Z contains a P3")
    return out
