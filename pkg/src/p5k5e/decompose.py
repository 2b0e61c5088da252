"""Clique cut-sets, atom decomposition and colouring merge."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coloring import Coloring, ImproperColoring
from .graph import Graph, GraphError, bits, connected_components, is_connected, lowest


class Disconnected(GraphError):
    pass


class ImproperAtomColoring(ImproperColoring):
    pass


def _full_components(g: Graph, sep: int, within: int) -> list[int]:
    return connected_components(g, within & ~sep)


def minimal_separators(g: Graph) -> list[int]:
    """All minimal separators of a connected graph.

    Generation starts from the neighbourhoods of components of ``G - N[v]`` and
    closes under ``S -> N(C)`` for components ``C`` of ``G - (S | N(x))``,
    ``x`` in ``S``.
    """
    full = g.vertices
    found: set[int] = set()
    queue: list[int] = []

    def add_from(removed: int) -> None:
        for comp in connected_components(g, full & ~removed):
            sep = g.neighborhood(comp) & ~comp
            if sep and sep not in found:
                found.add(sep)
                queue.append(sep)

    for v in range(g.n):
        add_from(g.adj[v] | (1 << v))
    while queue:
        sep = queue.pop()
        for x in bits(sep):
            add_from(sep | g.adj[x])
    return sorted(found, key=lambda s: (s.bit_count(), s))


def find_clique_cutset(g: Graph) -> tuple[int, int, int] | None:
    """Smallest clique whose removal disconnects ``g``, as ``(K, A, B)``.

    ``A`` is the component of ``G - K`` holding the least vertex outside ``K``
    and ``B`` is everything else outside ``K``.
    """
    if not is_connected(g):
        raise Disconnected("clique cut-set search needs a connected graph")
    for sep in minimal_separators(g):
        if g.is_clique(sep):
            rest = g.vertices & ~sep
            a = connected_components(g, rest)[0]
            return sep, a, rest & ~a
    return None


def has_clique_cutset(g: Graph) -> bool:
    return find_clique_cutset(g) is not None


def is_atom(g: Graph) -> bool:
    return is_connected(g) and find_clique_cutset(g) is None


@dataclass(frozen=True)
class Atom:
    mask: int
    graph: Graph
    verts: tuple[int, ...]


@dataclass
class DecompositionTree:
    host: Graph
    atoms: list[Atom] = field(default_factory=list)
    # (parent atom, child atom, shared clique as a host mask)
    links: list[tuple[int, int, int]] = field(default_factory=list)

    def children(self, i: int) -> list[tuple[int, int]]:
        return [(c, k) for p, c, k in self.links if p == i]

    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "atoms": [{"size": a.mask.bit_count(), "vertices": list(a.verts)} for a in self.atoms],
            "links": [
                {"parent": p, "child": c, "clique": list(bits(k))} for p, c, k in self.links
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines: list[str] = []

        def walk(i: int, depth: int, via: int | None) -> None:
            atom = self.atoms[i]
            label = f"atom {i}: {atom.mask.bit_count()} vertices {list(atom.verts)}"
            if via is not None:
                label += f" via clique {list(bits(via))}"
            lines.append("  " * depth + label)
            for c, k in self.children(i):
                walk(c, depth + 1, k)

        if self.atoms:
            walk(0, 0, None)
        return "\n".join(lines) + "\n"


def atom_decomposition(g: Graph) -> DecompositionTree:
    """Split ``g`` along clique cut-sets until every piece is an atom.

    Each split ``(K, A, B)`` recurses on ``K | A`` and ``K | B``; the two
    resulting subtrees are joined by an edge between atoms that contain ``K``.
    """
    if not is_connected(g):
        raise Disconnected("decomposition needs a connected graph")
    tree = DecompositionTree(g)
    if g.n == 0:
        return tree

    def build(mask: int) -> int:
        """Decompose ``g[mask]``; returns the index of its root atom."""
        sub, verts = g.induced(mask)
        cut = find_clique_cutset(sub)
        if cut is None:
            tree.atoms.append(Atom(mask, sub, tuple(verts)))
            return len(tree.atoms) - 1
        k_loc, a_loc, b_loc = cut
        lift = lambda m: sum(1 << verts[i] for i in bits(m))  # noqa: E731
        k, a, b = lift(k_loc), lift(a_loc), lift(b_loc)
        first = len(tree.atoms)
        left_root = build(k | a)
        middle = len(tree.atoms)
        build(k | b)
        left_host = next(i for i in range(first, middle) if tree.atoms[i].mask & k == k)
        right_host = next(i for i in range(middle, len(tree.atoms)) if tree.atoms[i].mask & k == k)
        _reroot(tree, range(middle, len(tree.atoms)), right_host)
        tree.links.append((left_host, right_host, k))
        return left_root

    build(g.vertices)
    return tree


def _reroot(tree: DecompositionTree, span: range, new_root: int) -> None:
    """Reorient links among atoms in ``span`` so ``new_root`` has no parent."""
    inside = [(i, link) for i, link in enumerate(tree.links) if link[0] in span and link[1] in span]
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for _, (p, c, k) in inside:
        nbrs.setdefault(p, []).append((c, k))
        nbrs.setdefault(c, []).append((p, k))
    for i, _ in sorted(inside, reverse=True):
        del tree.links[i]
    seen = {new_root}
    stack = [new_root]
    while stack:
        u = stack.pop()
        for w, k in nbrs.get(u, []):
            if w not in seen:
                seen.add(w)
                tree.links.append((u, w, k))
                stack.append(w)


def merge_colorings(tree: DecompositionTree, atom_colorings: list[Coloring]) -> Coloring:
    """Glue per-atom colourings into one colouring of the host.

    Each child's colours are permuted to agree with its parent on the shared
    clique, so the total equals the largest atom colour count.
    """
    if len(atom_colorings) != len(tree.atoms):
        raise ImproperAtomColoring("one colouring per atom is required")
    for i, (atom, col) in enumerate(zip(tree.atoms, atom_colorings)):
        if not col.is_proper(atom.graph):
            raise ImproperAtomColoring(f"atom {i} colouring is not proper")
    if not tree.atoms:
        return Coloring((), 0)
    top = max(c.k for c in atom_colorings)
    final = [-1] * tree.host.n

    def paint(i: int, fixed: dict[int, int]) -> None:
        atom = tree.atoms[i]
        local = atom_colorings[i].colors
        mapping = dict(fixed)
        taken = set(fixed.values())
        spare = iter(c for c in range(top) if c not in taken)
        for c in range(atom_colorings[i].k):
            if c not in mapping:
                mapping[c] = next(spare)
        for j, v in enumerate(atom.verts):
            final[v] = mapping[local[j]]
        for child, clique in tree.children(i):
            catom = tree.atoms[child]
            ccol = atom_colorings[child].colors
            pos = {v: j for j, v in enumerate(catom.verts)}
            paint(child, {ccol[pos[v]]: final[v] for v in bits(clique)})

    paint(0, {})
    out = Coloring(tuple(final), top)
    if not out.is_proper(tree.host):
        raise ImproperAtomColoring("merged colouring is not proper")
    return out
