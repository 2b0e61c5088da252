"""Immutable bitset graphs and the basic queries every other module builds on.

Vertices are ``0..n-1``; a vertex set is a plain ``int`` whose bit ``v`` is
set when ``v`` belongs to it. Adjacency rows are stored the same way, so set
algebra on neighbourhoods is a handful of integer operations.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for input errors raised by this package."""


class MalformedGraph6(GraphError):
    pass


class TooLarge(GraphError):
    pass


class OverlappingSets(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with adjacency as bit rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise TooLarge(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # internal constructor for rows already known to be valid
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > MAX_VERTICES:
            raise TooLarge(f"graph order {n} exceeds {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors_in(self, v: int, mask: int) -> int:
        return self.adj[v] & mask

    def common_neighbors(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to every member of ``mask``."""
        out = self.vertices & ~mask
        for v in bits(mask):
            out &= self.adj[v]
        return out

    def neighborhood(self, mask: int) -> int:
        """Vertices outside ``mask`` with at least one neighbour in ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask`` plus the map new index -> old vertex."""
        verts = list(bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(len(verts), tuple(rows)), verts

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph._trusted(self.n, tuple(rows))

    def add_vertex(self, neighbors: int) -> "Graph":
        n = self.n
        rows = [row | ((neighbors >> v & 1) << n) for v, row in enumerate(self.adj)]
        rows.append(neighbors)
        if n + 1 > MAX_VERTICES:
            raise TooLarge(f"graph order {n + 1} exceeds {MAX_VERTICES}")
        return Graph._trusted(n + 1, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(rows))


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    """Vertex set of the component of ``g[within]`` containing ``v``."""
    if within is None:
        within = g.vertices
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Components of ``g`` (or of ``g[within]``), ordered by least vertex."""
    rest = g.vertices if within is None else within
    parts = []
    while rest:
        comp = component_of(g, lowest(rest), rest)
        parts.append(comp)
        rest &= ~comp
    return parts


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.vertices if within is None else within
    if not mask:
        return True
    return component_of(g, lowest(mask), mask) == mask


COMPLETE = "complete"
ANTICOMPLETE = "anticomplete"
MIXED = "mixed"


def set_relation(g: Graph, a: int, b: int) -> str:
    """Classify two disjoint vertex sets as complete, anticomplete or mixed."""
    if a & b:
        raise OverlappingSets("sets must be disjoint")
    complete = anti = True
    for v in bits(a):
        row = g.adj[v] & b
        if row != b:
            complete = False
        if row:
            anti = False
    if complete:
        return COMPLETE
    if anti:
        return ANTICOMPLETE
    return MIXED


def is_complete_to(g: Graph, a: int, b: int) -> bool:
    for v in bits(a):
        if g.adj[v] & b != b:
            return False
    return True


def is_anticomplete_to(g: Graph, a: int, b: int) -> bool:
    for v in bits(a):
        if g.adj[v] & b:
            return False
    return True


def _greedy_color_bound(g: Graph, cand: int) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of ``cand``; returns vertices and colour numbers
    in non-decreasing colour order (the classic bound used by MCQ-style search)."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = lowest(avail)
            avail &= ~g.adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: Graph, within: int | None = None) -> int:
    """A maximum clique of ``g`` (or of ``g[within]``) as a vertex set.

    Branch and bound with greedy-colouring upper bounds; among maximum
    cliques the first one reached in index order is returned.
    """
    cand = g.vertices if within is None else within
    best = [0, 0]  # size, mask

    def expand(clique: int, size: int, cand: int) -> None:
        order, colors = _greedy_color_bound(g, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return
            v = order[i]
            new_clique = clique | (1 << v)
            new_cand = cand & g.adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = new_clique
            cand &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[1]


def clique_number(g: Graph, within: int | None = None) -> int:
    return max_clique(g, within).bit_count()


def max_stable_set(g: Graph, within: int | None = None) -> int:
    return max_clique(complement(g), within)


def independence_number(g: Graph, within: int | None = None) -> int:
    return max_stable_set(g, within).bit_count()


def two_coloring(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """Bipartition ``(side0, side1)`` of ``g[within]``, or ``None`` when an odd
    cycle exists. In each component the least vertex goes to ``side0``."""
    mask = g.vertices if within is None else within
    side = [0, 0]
    for comp in connected_components(g, mask):
        start = lowest(comp)
        color = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u] & comp):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        for v, c in color.items():
            side[c] |= 1 << v
    return side[0], side[1]


@dataclass(frozen=True)
class BipartiteAnalysis:
    left: int
    right: int
    matching: tuple[tuple[int, int], ...]

    @property
    def matching_size(self) -> int:
        return len(self.matching)


def maximum_bipartite_matching(g: Graph, left: int, right: int) -> dict[int, int]:
    """Maximum matching between ``left`` and ``right`` by augmenting paths.

    Returns ``mate`` with both directions recorded.
    """
    mate: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for w in bits(g.adj[u] & right):
            if w in visited:
                continue
            visited.add(w)
            if w not in mate or augment(mate[w], visited):
                mate[u] = w
                mate[w] = u
                return True
        return False

    for u in bits(left):
        augment(u, set())
    return mate


def bipartite_analysis(g: Graph, within: int | None = None) -> BipartiteAnalysis | None:
    """2-colouring and maximum matching of ``g[within]``; ``None`` if not bipartite."""
    sides = two_coloring(g, within)
    if sides is None:
        return None
    left, right = sides
    mate = maximum_bipartite_matching(g, left, right)
    pairs = tuple(sorted((u, mate[u]) for u in bits(left) if u in mate))
    return BipartiteAnalysis(left, right, pairs)


def has_augmenting_path(g: Graph, left: int, right: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """True when the matching ``pairs`` can be enlarged; used to certify maximality."""
    mate: dict[int, int] = {}
    for u, w in pairs:
        mate[u] = w
        mate[w] = u
    free_left = [u for u in bits(left) if u not in mate]
    for start in free_left:
        seen_right: set[int] = set()
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u] & right):
                if w in seen_right:
                    continue
                seen_right.add(w)
                if w not in mate:
                    return True
                queue.append(mate[w])
    return False


# --- text formats -----------------------------------------------------------


def _n_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """McKay graph6 encoding (no ``>>graph6<<`` header)."""
    out = [_n_header(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, max_n: int = MAX_VERTICES) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(c) - 63 for c in line]
    if any(d < 0 or d > 63 for d in data):
        raise MalformedGraph6(f"character outside graph6 range in {text!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise MalformedGraph6("truncated long header")
        if data[1] == 63:
            raise TooLarge("graph6 orders above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > max_n:
        raise TooLarge(f"graph order {n} exceeds {max_n}")
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(body) != need_chars:
        raise MalformedGraph6(
            f"expected {need_chars} data characters for n={n}, got {len(body)}"
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-based, ``#`` comments). The order comes from the
    ``n`` argument, else a ``# n=K`` comment, else the largest endpoint plus one."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        line = line.strip()
        hint = re.match(r"\s*n\s*=\s*(\d+)", comment)
        if hint and n is None:
            n = int(hint.group(1))
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedEdgeList(f"line {lineno}: expected two vertex indices")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MalformedEdgeList(f"line {lineno}: {exc}") from None
        if u < 0 or v < 0:
            raise MalformedEdgeList(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
