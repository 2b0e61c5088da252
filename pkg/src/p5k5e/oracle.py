"""Exact chromatic number by two unrelated routes.

The backtracking route is the workhorse. The stable-set-cover route is a
subset dynamic programme used only to cross-check it on small graphs. Neither
touches the structural colouring code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .graph import Graph, TooLarge, bits, max_clique

ORACLE_MAX_N = 16
COVER_MAX_N = 14


@dataclass(frozen=True)
class ExactResult:
    chi: int
    witness: Coloring
    nodes_explored: int


class _Search:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.nodes = 0
        self.color = [-1] * g.n
        self.classes = [0] * k

    def run(self, seed: int) -> bool:
        # seed clique takes colours 0..|seed|-1; that fixes the colour symmetry
        for c, v in enumerate(bits(seed)):
            self.color[v] = c
            self.classes[c] |= 1 << v
        return self._extend(self.g.vertices & ~seed, seed.bit_count())

    def _pick(self, uncolored: int) -> tuple[int, list[int]]:
        adj = self.g.adj
        best = -1
        best_key = None
        best_free: list[int] = []
        for v in bits(uncolored):
            free = [c for c in range(self.k) if not adj[v] & self.classes[c]]
            key = (-len(free), (adj[v] & uncolored).bit_count())
            if best_key is None or key > best_key:
                best, best_key, best_free = v, key, free
                if not free:
                    break
        return best, best_free

    def _extend(self, uncolored: int, used: int) -> bool:
        self.nodes += 1
        if not uncolored:
            return True
        v, free = self._pick(uncolored)
        for c in free:
            if c > used:
                break
            self.color[v] = c
            self.classes[c] |= 1 << v
            if self._extend(uncolored & ~(1 << v), max(used, c + 1)):
                return True
            self.classes[c] &= ~(1 << v)
            self.color[v] = -1
        return False


def _colorable(g: Graph, k: int, clique: int) -> tuple[Coloring | None, int]:
    if g.n == 0:
        return Coloring((), 0), 0
    if k < clique.bit_count():
        return None, 0
    search = _Search(g, k)
    if search.run(clique):
        return Coloring.from_assignment(search.color), search.nodes
    return None, search.nodes


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n > ORACLE_MAX_N:
        raise TooLarge(f"oracle handles at most {ORACLE_MAX_N} vertices")
    return _colorable(g, k, max_clique(g))[0]


def chromatic_number(g: Graph, max_n: int = ORACLE_MAX_N) -> ExactResult:
    """Smallest ``k`` with a proper ``k``-colouring, searched upward from ``omega``."""
    if g.n > max_n:
        raise TooLarge(f"oracle handles at most {max_n} vertices")
    if g.n == 0:
        return ExactResult(0, Coloring((), 0), 0)
    clique = max_clique(g)
    total = 0
    for k in range(clique.bit_count(), g.n + 1):
        found, nodes = _colorable(g, k, clique)
        total += nodes
        if found is not None:
            return ExactResult(k, found, total)
    raise AssertionError("n colours always suffice")


def chromatic_number_by_covers(g: Graph) -> int:
    """Chromatic number as the fewest stable sets covering ``V``, by subset DP."""
    n = g.n
    if n > COVER_MAX_N:
        raise TooLarge(f"cover DP handles at most {COVER_MAX_N} vertices")
    size = 1 << n
    stable = bytearray(size)
    stable[0] = 1
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        stable[s] = stable[rest] and not (g.adj[v] & rest)
    best = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        # the stable set covering the least vertex of s is low | sub
        result = n + 1
        sub = rest
        while True:
            t = low | sub
            if stable[t]:
                cand = best[s ^ t] + 1
                if cand < result:
                    result = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = result
    return best[size - 1]
