"""Induced-subgraph patterns and the detectors built on them.

A :class:`PatternGraph` fixes every vertex pair as a required edge, a required
non-edge, or an optional pair whose adjacency is left open (the dotted pairs of
F4 and F5). Detection always returns the lexicographically least embedding in
the pattern's own vertex order, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .graph import (
    Graph,
    GraphError,
    bits,
    clique_number,
    complement,
    independence_number,
    is_connected,
    lowest,
)


class EmptyOrFullSet(GraphError):
    pass


Pair = tuple[int, int]


def _norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PatternGraph:
    name: str
    k: int
    labels: tuple[str, ...]
    required_edges: frozenset[Pair]
    required_nonedges: frozenset[Pair]
    optional_pairs: frozenset[Pair] = frozenset()
    edge_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)
    nonedge_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.k > 8:
            raise GraphError("patterns are limited to 8 vertices")
        if len(self.labels) != self.k:
            raise GraphError("one label per pattern vertex")
        all_pairs = {(u, v) for u in range(self.k) for v in range(u + 1, self.k)}
        sets = (self.required_edges, self.required_nonedges, self.optional_pairs)
        seen: set[Pair] = set()
        for s in sets:
            if seen & s:
                raise GraphError(f"pattern {self.name}: pair classes overlap")
            seen |= s
        if seen != all_pairs:
            raise GraphError(f"pattern {self.name}: pair classes do not cover all pairs")
        e_rows = [0] * self.k
        n_rows = [0] * self.k
        for u, v in self.required_edges:
            e_rows[u] |= 1 << v
            e_rows[v] |= 1 << u
        for u, v in self.required_nonedges:
            n_rows[u] |= 1 << v
            n_rows[v] |= 1 << u
        object.__setattr__(self, "edge_rows", tuple(e_rows))
        object.__setattr__(self, "nonedge_rows", tuple(n_rows))

    @classmethod
    def build(
        cls,
        name: str,
        labels: list[str] | tuple[str, ...],
        edges: list[tuple[str, str]],
        optional: list[tuple[str, str]] = (),
    ) -> "PatternGraph":
        index = {lab: i for i, lab in enumerate(labels)}
        req = {_norm(index[a], index[b]) for a, b in edges}
        opt = {_norm(index[a], index[b]) for a, b in optional}
        k = len(labels)
        non = {(u, v) for u in range(k) for v in range(u + 1, k)} - req - opt
        return cls(name, k, tuple(labels), frozenset(req), frozenset(non), frozenset(opt))

    @classmethod
    def from_graph(cls, name: str, g: Graph, labels: tuple[str, ...] | None = None) -> "PatternGraph":
        labels = labels or tuple(str(i) for i in range(g.n))
        edges = [(labels[u], labels[v]) for u, v in g.edges()]
        return cls.build(name, labels, edges)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def as_graph(self, optional_as_edges: bool = False) -> Graph:
        pairs = set(self.required_edges)
        if optional_as_edges:
            pairs |= self.optional_pairs
        return Graph.from_edges(self.k, pairs)

    def is_embedding(self, g: Graph, image: tuple[int, ...]) -> bool:
        if len(image) != self.k or len(set(image)) != self.k:
            return False
        for u, v in self.required_edges:
            if not g.has_edge(image[u], image[v]):
                return False
        for u, v in self.required_nonedges:
            if g.has_edge(image[u], image[v]):
                return False
        return True

    def manifest_line(self) -> str:
        def fmt(pairs: frozenset[Pair]) -> str:
            return " ".join(f"{self.labels[u]}-{self.labels[v]}" for u, v in sorted(pairs)) or "-"

        return (
            f"{self.name}\tk={self.k}\tvertices={','.join(self.labels)}\t"
            f"edges={fmt(self.required_edges)}\toptional={fmt(self.optional_pairs)}"
        )


# --- library ------------------------------------------------------------------


def _clique_edges(labels: list[str]) -> list[tuple[str, str]]:
    return [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]]


@lru_cache(maxsize=None)
def k_t(t: int) -> PatternGraph:
    labels = [f"k{i}" for i in range(t)]
    return PatternGraph.build(f"K{t}", labels, _clique_edges(labels))


@lru_cache(maxsize=None)
def h_t(t: int) -> PatternGraph:
    """K_{t+3} plus a vertex joined to exactly two of its vertices.

    Vertex order is ``v1 v2 v3 z1..zt y`` with ``y`` adjacent to ``v2, v3``,
    matching how the larger-clique arguments label it.
    """
    if t < 1:
        raise GraphError("H_t needs t >= 1")
    clique = ["v1", "v2", "v3"] + [f"z{i}" for i in range(1, t + 1)]
    labels = clique + ["y"]
    edges = _clique_edges(clique) + [("y", "v2"), ("y", "v3")]
    return PatternGraph.build("HVN" if t == 1 else f"H{t}", labels, edges)


P5 = PatternGraph.build(
    "P5", ["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]
)

# the missing edge is a-b
K5_MINUS_E = PatternGraph.build(
    "K5-e",
    ["a", "b", "c", "d", "e"],
    [p for p in _clique_edges(["a", "b", "c", "d", "e"]) if p != ("a", "b")],
)

C5 = PatternGraph.build(
    "C5", ["s1", "s2", "s3", "s4", "s5"],
    [("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("s4", "s5"), ("s5", "s1")],
)
FIVE_RING_TEMPLATE = C5

_C = ["v1", "v2", "v3"]

F1 = PatternGraph.build(
    "F1",
    ["v1", "v2", "v3", "x1", "y2", "y3", "z"],
    _clique_edges(_C)
    + [("z", "v1"), ("z", "v2"), ("z", "v3")]
    + [("y2", "v1"), ("y2", "v3"), ("y3", "v1"), ("y3", "v2")]
    + [("x1", "v1"), ("x1", "y2"), ("x1", "y3"), ("y2", "y3")],
)

_F23_BASE = (
    _clique_edges(["v1", "v2", "v3", "z1", "z2"])
    + [("y2", "v1"), ("y2", "v3"), ("y3", "v1"), ("y3", "v2")]
)
F2 = PatternGraph.build(
    "F2", ["v1", "v2", "v3", "y2", "y3", "z1", "z2"], _F23_BASE + [("y2", "y3")]
)
F3 = PatternGraph.build("F3", ["v1", "v2", "v3", "y2", "y3", "z1", "z2"], _F23_BASE)

# K4 plus two vertices, each seeing exactly two clique vertices, the two pairs
# sharing one vertex; the pair between the outside vertices is left open.
F4 = PatternGraph.build(
    "F4",
    ["v1", "v2", "v3", "z*", "y2", "y3"],
    _clique_edges(["v1", "v2", "v3", "z*"])
    + [("y2", "v1"), ("y2", "v3"), ("y3", "v1"), ("y3", "v2")],
    optional=[("y2", "y3")],
)

# K4 plus a vertex seeing two clique vertices and a vertex seeing one of those.
F5 = PatternGraph.build(
    "F5",
    ["v1", "v2", "v3", "z*", "x1", "y2"],
    _clique_edges(["v1", "v2", "v3", "z*"]) + [("x1", "v1"), ("y2", "v1"), ("y2", "v3")],
    optional=[("x1", "y2")],
)

HVN = h_t(1)


def library() -> dict[str, PatternGraph]:
    """Named patterns; parametrised families are shown at small parameters."""
    lib = {
        "P5": P5,
        "K5-e": K5_MINUS_E,
        "C5": C5,
        "F1": F1,
        "F2": F2,
        "F3": F3,
        "F4": F4,
        "F5": F5,
        "HVN": HVN,
    }
    for t in (3, 4, 5):
        lib[f"K{t}"] = k_t(t)
    for t in (2, 3):
        lib[f"H{t}"] = h_t(t)
    return lib


def pattern_by_name(name: str) -> PatternGraph:
    lib = library()
    if name in lib:
        return lib[name]
    upper = name.upper()
    if upper.startswith("K") and upper[1:].isdigit():
        return k_t(int(upper[1:]))
    if upper.startswith("H") and upper[1:].isdigit():
        return h_t(int(upper[1:]))
    raise KeyError(f"unknown pattern {name!r}")


def manifest() -> str:
    return "\n".join(p.manifest_line() for p in library().values()) + "\n"


# --- detection ----------------------------------------------------------------


def iter_induced(g: Graph, p: PatternGraph, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """All embeddings of ``p`` into ``g[within]`` in lexicographic order."""
    host = g.vertices if within is None else within
    k = p.k
    if k > host.bit_count():
        return
    adj = g.adj
    e_rows = p.edge_rows
    n_rows = p.nonedge_rows
    image = [0] * k

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        cand = host & ~used
        er = e_rows[i]
        nr = n_rows[i]
        for j in range(i):
            if er >> j & 1:
                cand &= adj[image[j]]
            elif nr >> j & 1:
                cand &= ~adj[image[j]]
            if not cand:
                return
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if i + 1 == k:
                yield tuple(image)
            else:
                yield from rec(i + 1, used | low)

    yield from rec(0, 0)


def find_induced(g: Graph, p: PatternGraph, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least embedding of ``p`` in ``g``, or ``None``."""
    return next(iter_induced(g, p, within), None)


def contains(g: Graph, p: PatternGraph, within: int | None = None) -> bool:
    return find_induced(g, p, within) is not None


def find_p5_fast(g: Graph) -> tuple[int, ...] | None:
    """Induced P5 by extending induced paths vertex by vertex."""
    adj = g.adj
    n = g.n

    def extend(path: list[int], blocked: int) -> tuple[int, ...] | None:
        last = path[-1]
        cand = adj[last] & ~blocked
        new_blocked = blocked | adj[last] | (1 << last)
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            path.append(w)
            if len(path) == 5:
                return tuple(path)
            found = extend(path, new_blocked)
            if found:
                return found
            path.pop()
        return None

    for s in range(n):
        found = extend([s], 1 << s)
        if found:
            return found
    return None


def find_k5e_fast(g: Graph) -> tuple[int, ...] | None:
    """Induced K5-e: a non-adjacent pair whose common neighbourhood has a triangle.

    The result follows the ``K5_MINUS_E`` vertex order ``(a, b, c, d, e)`` with
    ``a, b`` the non-adjacent pair.
    """
    adj = g.adj
    for u in range(g.n):
        non = g.vertices & ~adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(non):
            common = adj[u] & adj[v]
            if common.bit_count() < 3:
                continue
            for c in bits(common):
                rest = common & adj[c] & ~((1 << (c + 1)) - 1)
                for d in bits(rest):
                    tri = rest & adj[d] & ~((1 << (d + 1)) - 1)
                    if tri:
                        return (u, v, c, d, lowest(tri))
    return None


@dataclass(frozen=True)
class ClassReport:
    omega: int
    alpha: int
    is_connected: bool
    in_class: bool
    witness_pattern: str | None = None
    witness: tuple[int, ...] | None = None


def in_class(g: Graph) -> tuple[bool, str | None, tuple[int, ...] | None]:
    """Membership in the (P5, K5-e)-free class, with a witness when outside."""
    w = find_p5_fast(g)
    if w is not None:
        return False, "P5", w
    w = find_k5e_fast(g)
    if w is not None:
        return False, "K5-e", w
    return True, None, None


def in_class_generic(g: Graph) -> tuple[bool, str | None, tuple[int, ...] | None]:
    for p in (P5, K5_MINUS_E):
        w = find_induced(g, p)
        if w is not None:
            return False, p.name, w
    return True, None, None


def is_in_class(g: Graph) -> bool:
    return find_p5_fast(g) is None and find_k5e_fast(g) is None


def class_report(g: Graph) -> ClassReport:
    ok, name, w = in_class(g)
    return ClassReport(
        omega=clique_number(g),
        alpha=independence_number(g),
        is_connected=is_connected(g),
        in_class=ok,
        witness_pattern=name,
        witness=w,
    )


# --- structural recognisers -----------------------------------------------------


def five_ring_partition(g: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Split a connected ``g[within]`` into the five stable parts of a 5-ring.

    In a 5-ring the parts are exactly the classes of vertices sharing a
    neighbourhood, so the test groups vertices by neighbourhood and checks that
    the quotient is a 5-cycle. Part 1 holds the least vertex; part 2 is the
    neighbouring part with the smaller least vertex.
    """
    mask = g.vertices if within is None else within
    classes: dict[int, int] = {}
    for v in bits(mask):
        key = g.adj[v] & mask
        classes[key] = classes.get(key, 0) | (1 << v)
    if len(classes) != 5:
        return None
    parts = list(classes.values())
    nbr_parts: dict[int, list[int]] = {}
    for i, part in enumerate(parts):
        nb = g.adj[lowest(part)] & mask
        touching = [j for j, other in enumerate(parts) if other & nb]
        if len(touching) != 2:
            return None
        if sum(parts[j] for j in touching) != nb:
            return None
        nbr_parts[i] = touching
    start = min(range(5), key=lambda i: lowest(parts[i]))
    a, b = nbr_parts[start]
    nxt = a if lowest(parts[a]) < lowest(parts[b]) else b
    order = [start, nxt]
    while len(order) < 5:
        cur, prev = order[-1], order[-2]
        cands = [j for j in nbr_parts[cur] if j != prev]
        if len(cands) != 1 or cands[0] in order:
            return None
        order.append(cands[0])
    if start not in nbr_parts[order[-1]]:
        return None
    return tuple(parts[i] for i in order)


def is_five_ring(g: Graph, within: int | None = None) -> bool:
    mask = g.vertices if within is None else within
    return is_connected(g, mask) and five_ring_partition(g, mask) is not None


def is_homogeneous_set(g: Graph, x: int) -> bool:
    """Every vertex outside ``x`` is complete or anticomplete to ``x``."""
    if x == 0 or x == g.vertices:
        raise EmptyOrFullSet("homogeneous-set test needs a proper nonempty subset")
    for v in bits(g.vertices & ~x):
        seen = g.adj[v] & x
        if seen and seen != x:
            return False
    return True


def _find_hole(g: Graph, length: int) -> tuple[int, ...] | None:
    """Induced cycle of exactly ``length`` vertices whose least vertex is first."""
    adj = g.adj
    for s in range(g.n):
        higher = g.vertices & ~((1 << (s + 1)) - 1)
        closed_s = adj[s] | (1 << s)

        def extend(path: list[int], blocked: int) -> tuple[int, ...] | None:
            # blocked: closed neighbourhoods of every path vertex except the last
            last = path[-1]
            if len(path) == length - 1:
                inner = blocked & ~closed_s
                closers = adj[last] & adj[s] & higher & ~inner & ~(1 << last)
                # the closing vertex may touch only s and last
                for w in bits(closers):
                    if not (adj[w] & _path_mask(path[1:-1])):
                        return tuple(path + [w])
                return None
            cand = adj[last] & higher & ~blocked
            nb = blocked | adj[last] | (1 << last)
            for w in bits(cand):
                path.append(w)
                found = extend(path, nb)
                if found:
                    return found
                path.pop()
            return None

        found = extend([s], 0) if length > 3 else None
        if found:
            return found
    return None


def _path_mask(vertices: list[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def find_odd_hole_or_antihole(g: Graph) -> tuple[tuple[int, ...], bool] | None:
    """Shortest odd hole (length >= 5) in ``g`` or in its complement.

    Returns ``(cycle, in_complement)``. By the strong perfect graph theorem a
    ``None`` result means ``g`` is perfect.
    """
    co = complement(g)
    for length in range(5, g.n + 1, 2):
        hole = _find_hole(g, length)
        if hole is not None:
            return hole, False
        hole = _find_hole(co, length)
        if hole is not None:
            return hole, True
    return None


def is_perfect(g: Graph) -> bool:
    return find_odd_hole_or_antihole(g) is None
