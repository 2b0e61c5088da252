"""Canonical labelling by individualisation and refinement.

Small graphs only. The certificate is the adjacency of the relabelled graph
that is least over all leaves of the search tree, so two graphs are
isomorphic exactly when their certificates are equal.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cells split by neighbour counts, ascending."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            splitter = 0
            for v in cells[s]:
                splitter |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[key] for key in sorted(groups))
                else:
                    out.append(cell)
            cells = out
            if changed:
                break
    return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            r ^= low
            row |= 1 << pos[low.bit_length() - 1]
        rows.append(row)
    return tuple(rows)


def canonical_order(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Vertex order realising the canonical form, with its certificate."""
    adj = g.adj
    if g.n == 0:
        return [], ()
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[1] is None or cert < best[1]:
                best[0], best[1] = order, cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # swapping twins is an automorphism, so their branches coincide
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    search([by_degree[d] for d in sorted(by_degree)])
    return best[0], best[1]


def certificate(g: Graph) -> tuple[int, ...]:
    return canonical_order(g)[1]


def canonical_form(g: Graph) -> Graph:
    order, cert = canonical_order(g)
    return Graph._trusted(g.n, cert)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return certificate(g) == certificate(h)


def canonical_hash(g: Graph) -> int:
    """Stable shard key; equal for isomorphic graphs."""
    h = g.n
    for row in certificate(g):
        h = (h * 1_000_003 + row) & 0xFFFFFFFFFFFF
    return h
