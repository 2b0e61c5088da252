"""Isomorph-free generation of small connected graphs.

Every connected graph on ``n`` vertices has a vertex whose removal leaves it
connected, so level ``n`` is reached by attaching a new vertex with a
nonempty neighbourhood to each graph of level ``n - 1``. Duplicates are
removed by canonical certificate.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator

from .canon import canonical_form, certificate
from .graph import Graph, TooLarge, disjoint_union

GENERATOR_MAX_N = 8

Filter = Callable[[Graph], bool]


def _level(prev: list[Graph], keep: Filter | None) -> list[Graph]:
    seen: dict[tuple[int, ...], Graph] = {}
    for g in prev:
        for nbrs in range(1, 1 << g.n):
            h = g.add_vertex(nbrs)
            if keep is not None and not keep(h):
                continue
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = Graph._trusted(h.n, cert)
    return [seen[c] for c in sorted(seen)]


def connected_levels(n_max: int, keep: Filter | None = None, limit: int = GENERATOR_MAX_N) -> Iterator[list[Graph]]:
    """Yield the canonical connected graphs of order 1, 2, ..., ``n_max``.

    ``keep`` must describe a hereditary property; only graphs passing it are
    generated and extended.
    """
    if n_max > limit:
        raise TooLarge(f"generator is limited to n <= {limit}, got {n_max}")
    if n_max < 1:
        return
    level = [canonical_form(Graph.empty(1))]
    if keep is not None:
        level = [g for g in level if keep(g)]
    yield level
    for _ in range(2, n_max + 1):
        level = _level(level, keep)
        yield level


def enumerate_connected(n: int, keep: Filter | None = None) -> list[Graph]:
    """All connected graphs of order ``n`` up to isomorphism, in certificate order."""
    last: list[Graph] = []
    for last in connected_levels(n, keep):
        pass
    return last


def enumerate_all(n: int, keep: Filter | None = None) -> list[Graph]:
    """All graphs of order ``n`` up to isomorphism (connected or not).

    Built from multisets of connected components, so it inherits the bound of
    :func:`connected_levels`.
    """
    levels = [[]] + list(connected_levels(n, keep)) if n else [[]]
    out: dict[tuple[int, ...], Graph] = {}

    def extend(remaining: int, max_order: int, max_index: int, parts: list[Graph]) -> None:
        if remaining == 0:
            g = disjoint_union(*parts) if parts else Graph.empty(0)
            cert = certificate(g)
            out.setdefault(cert, Graph._trusted(g.n, cert))
            return
        for order in range(min(remaining, max_order), 0, -1):
            top = max_index if order == max_order else len(levels[order]) - 1
            for idx in range(top, -1, -1):
                extend(remaining - order, order, idx, parts + [levels[order][idx]])

    extend(n, n, len(levels[n]) - 1 if n else 0, [])
    return [out[c] for c in sorted(out)]
