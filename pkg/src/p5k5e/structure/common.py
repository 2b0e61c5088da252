"""Shared machinery for the structural colourings.

Vertex sets are int masks throughout. Indices ``0, 1, 2`` stand for the
triangle positions and all index arithmetic on them is mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..coloring import Coloring
from ..graph import Graph, GraphError, bits, connected_components, two_coloring
from ..patterns import five_ring_partition


class StructuralViolation(GraphError):
    """A property the colouring argument relies on failed on this input."""


class OutOfClass(GraphError):
    def __init__(self, pattern: str, witness: tuple[int, ...]):
        super().__init__(f"graph contains an induced {pattern} at {list(witness)}")
        self.pattern = pattern
        self.witness = witness


class NotATriangle(GraphError):
    pass


def nxt(i: int) -> int:
    return (i + 1) % 3


def prv(i: int) -> int:
    return (i + 2) % 3


@dataclass(frozen=True)
class TriadPartition:
    """Vertices split by how they see the triangle ``C = (v1, v2, v3)``.

    ``X[i]`` sees only ``C[i]``, ``Y[i]`` sees all of ``C`` but ``C[i]``,
    ``Z`` sees all of ``C`` and ``L`` sees none of it.
    """

    C: tuple[int, int, int]
    X: tuple[int, int, int]
    Y: tuple[int, int, int]
    Z: int
    L: int

    @property
    def c_mask(self) -> int:
        return sum(1 << v for v in self.C)

    @property
    def x_all(self) -> int:
        return self.X[0] | self.X[1] | self.X[2]

    @property
    def y_all(self) -> int:
        return self.Y[0] | self.Y[1] | self.Y[2]

    def parts(self) -> list[int]:
        return [self.c_mask, *self.X, *self.Y, self.Z, self.L]

    def to_dict(self) -> dict:
        m = lambda s: list(bits(s))  # noqa: E731
        return {
            "C": list(self.C),
            "X": [m(s) for s in self.X],
            "Y": [m(s) for s in self.Y],
            "Z": m(self.Z),
            "L": m(self.L),
        }


def triad_partition(g: Graph, triangle: tuple[int, int, int] | list[int]) -> TriadPartition:
    v1, v2, v3 = triangle
    if len({v1, v2, v3}) != 3 or not (g.has_edge(v1, v2) and g.has_edge(v1, v3) and g.has_edge(v2, v3)):
        raise NotATriangle(f"{tuple(triangle)} does not induce a triangle")
    c = (v1, v2, v3)
    cmask = (1 << v1) | (1 << v2) | (1 << v3)
    x = [0, 0, 0]
    y = [0, 0, 0]
    z = lz = 0
    for u in bits(g.vertices & ~cmask):
        seen = [bool(g.adj[u] >> c[i] & 1) for i in range(3)]
        count = sum(seen)
        if count == 0:
            lz |= 1 << u
        elif count == 3:
            z |= 1 << u
        elif count == 1:
            x[seen.index(True)] |= 1 << u
        else:
            y[seen.index(False)] |= 1 << u
    return TriadPartition(c, tuple(x), tuple(y), z, lz)


# --- stable-set helpers ---------------------------------------------------------


def require(condition: bool, message: str) -> None:
    if not condition:
        raise StructuralViolation(message)


def bipartition(g: Graph, mask: int, what: str = "set") -> tuple[int, int]:
    """Sides of a 2-colouring of ``g[mask]``; in every component the least vertex
    lands in the first side, so the first side is a maximal stable set."""
    sides = two_coloring(g, mask)
    require(sides is not None, f"{what} does not induce a bipartite graph")
    return sides


def big_components(g: Graph, mask: int) -> list[int]:
    return [c for c in connected_components(g, mask) if c & (c - 1)]


def larger_sides(g: Graph, mask: int, what: str = "set") -> int:
    """Union over big components of ``g[mask]`` of the larger bipartition side.

    The leftover of each component is the other side, so it stays stable.
    """
    out = 0
    for comp in big_components(g, mask):
        a, b = bipartition(g, comp, what)
        out |= a if a.bit_count() >= b.bit_count() else b
    return out


def five_ring_stable_union(g: Graph, mask: int) -> int:
    """A maximum stable set from each 5-ring component of ``g[mask]``, united."""
    out = 0
    for comp in connected_components(g, mask):
        parts = five_ring_partition(g, comp)
        if parts is None:
            continue
        best = max(range(5), key=lambda i: (parts[i] | parts[(i + 2) % 5]).bit_count())
        out |= parts[best] | parts[(best + 2) % 5]
    return out


def greedy_maximal_stable(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        if not g.adj[v] & out:
            out |= 1 << v
    return out


def bounded_coloring(g: Graph, mask: int, cap: int, what: str = "set") -> list[int]:
    """Fewest stable classes covering ``mask``, searched up to ``cap`` colours.

    Stand-in for colouring bounds quoted from outside results; raises when the
    bound fails on this input.
    """
    if not mask:
        return []
    order_adj = {v: g.adj[v] & mask for v in bits(mask)}
    for k in range(1, cap + 1):
        classes = _dsatur(order_adj, mask, k)
        if classes is not None:
            return classes
    raise StructuralViolation(f"{what} needs more than {cap} colours")


def _dsatur(adj: dict[int, int], mask: int, k: int) -> list[int] | None:
    classes = [0] * k

    def pick(left: int) -> tuple[int, list[int]]:
        choice, best, options = -1, None, []
        for v in bits(left):
            free = [c for c in range(k) if not adj[v] & classes[c]]
            key = (len(free), -(adj[v] & left).bit_count(), v)
            if best is None or key < best:
                choice, best, options = v, key, free
        return choice, options

    def step(left: int, used: int) -> bool:
        if not left:
            return True
        v, options = pick(left)
        for c in options:
            if c > used:
                break
            classes[c] |= 1 << v
            if step(left & ~(1 << v), max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        return False

    if step(mask, 0):
        return [c for c in classes if c]
    return None


# --- workspace --------------------------------------------------------------------


BRANCH_CAPS = {"F1": 5, "F2": 5, "F3": 5, "omega>=5": 6, "omega=4": 7}


def branch_cap(branch: str) -> int:
    """Colours a structural procedure may use, keyed by its branch family."""
    return BRANCH_CAPS[branch.split("/", 1)[0]]


@dataclass
class Workspace:
    """Named intermediate sets of one colouring run plus the final classes."""

    branch: str
    sets: dict[str, int] = field(default_factory=dict)
    classes: list[int] = field(default_factory=list)
    trace: list[str] | None = None

    def put(self, name: str, mask: int) -> int:
        self.sets[name] = mask
        return mask

    def add(self, *classes: int) -> None:
        self.classes.extend(classes)

    def emit(self, g: Graph) -> Coloring:
        """Check every class is stable and the classes partition ``V``."""
        seen = 0
        for idx, cls in enumerate(self.classes):
            if not g.is_stable(cls):
                bad = [(u, v) for u in bits(cls) for v in bits(g.adj[u] & cls) if u < v]
                raise StructuralViolation(f"{self.branch}: class {idx} is not stable, edges {bad[:3]}")
            if seen & cls:
                raise StructuralViolation(f"{self.branch}: class {idx} overlaps an earlier class")
            seen |= cls
        if seen != g.vertices:
            missing = list(bits(g.vertices & ~seen))
            raise StructuralViolation(f"{self.branch}: vertices {missing} left uncoloured")
        used = sum(1 for cls in self.classes if cls)
        if used > branch_cap(self.branch):
            raise StructuralViolation(f"{self.branch}: {used} colours exceed {branch_cap(self.branch)}")
        if self.trace is not None:
            self.trace.append(self.branch)
        return Coloring.from_classes(g.n, self.classes)
