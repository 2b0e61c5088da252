"""Vertex colourings as plain data, with properness checks and serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits


class ImproperColoring(GraphError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[int]) -> "Coloring":
        """Build from vertex masks; empty classes are dropped, the rest numbered in order.

        Raises ``ImproperColoring`` unless the masks partition ``range(n)``.
        """
        colors = [-1] * n
        k = 0
        for mask in classes:
            if not mask:
                continue
            for v in bits(mask):
                if v >= n or colors[v] != -1:
                    raise ImproperColoring(f"vertex {v} is out of range or coloured twice")
                colors[v] = k
            k += 1
        if -1 in colors:
            raise ImproperColoring(f"vertex {colors.index(-1)} is uncoloured")
        return cls(tuple(colors), k)

    @classmethod
    def from_assignment(cls, colors: Iterable[int]) -> "Coloring":
        """Renumber colours by first appearance so they run ``0..k-1``."""
        remap: dict[int, int] = {}
        out = []
        for c in colors:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return cls(tuple(out), len(remap))

    @property
    def n(self) -> int:
        return len(self.colors)

    def classes(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks

    def conflicts(self, g: Graph) -> list[tuple[int, int]]:
        if g.n != self.n:
            return [(-1, -1)]
        return [(u, v) for u, v in g.edges() if self.colors[u] == self.colors[v]]

    def is_proper(self, g: Graph) -> bool:
        if g.n != self.n or any(not 0 <= c < self.k for c in self.colors):
            return False
        return all(g.is_stable(mask) for mask in self.classes())

    def check(self, g: Graph) -> "Coloring":
        if not self.is_proper(g):
            raise ImproperColoring(f"monochromatic edges {self.conflicts(g)[:5]}")
        return self

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "colors": list(self.colors)})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        return cls(tuple(int(c) for c in data["colors"]), int(data["k"]))

    def to_text(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.colors))
