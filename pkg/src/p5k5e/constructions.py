"""Named graphs and the property checklists every build must pass.

The five stored graphs (``h_star``, ``g1`` .. ``g4``) are read from
``data/named_graphs.json``. Each build is gated by its checklist, evaluated
with this package's own detectors and exact oracle.
"""

from __future__ import annotations

import json
import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .decompose import has_clique_cutset
from .graph import (
    Graph,
    GraphError,
    clique_number,
    connected_components,
    independence_number,
    is_connected,
    parse_graph6,
)
from .oracle import chromatic_number
from .patterns import F1, F2, F3, F4, F5, HVN, contains, h_t, is_in_class, is_perfect


class UnknownName(GraphError):
    pass


class ChecklistFailure(GraphError):
    def __init__(self, name: str, failed: list[str]):
        super().__init__(f"{name}: checklist failed on {', '.join(failed)}")
        self.name = name
        self.failed = failed


Check = tuple[str, Callable[[Graph], bool]]


@dataclass(frozen=True)
class NamedConstruction:
    """A builder name plus integer parameters, e.g. ``perfect_family(8)``."""

    name: str
    params: tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> "NamedConstruction":
        m = re.fullmatch(r"\s*([a-z_0-9]+)\s*(?:\(([^)]*)\))?\s*", text)
        if not m:
            raise UnknownName(f"cannot parse construction {text!r}")
        args = m.group(2)
        try:
            params = tuple(int(a) for a in args.split(",") if a.strip()) if args else ()
        except ValueError as exc:
            raise UnknownName(f"non-integer parameter in {text!r}") from exc
        return cls(m.group(1), params)

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.params))})" if self.params else self.name


# builders


def perfect_family(t: int, attachments: Sequence[tuple[int, int]] = ((0, 2),)) -> Graph:
    """A clique ``Q = K_t`` with pendant cliques.

    Each ``(q, size)`` in ``attachments`` adds a clique of ``size`` new vertices
    complete to the single vertex ``q`` of ``Q`` and to nothing else.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
    n = t
    for q, size in attachments:
        if not 0 <= q < t or size < 1:
            raise ValueError(f"bad attachment ({q}, {size})")
        block = range(n, n + size)
        edges += [(q, b) for b in block]
        edges += [(a, b) for a in block for b in block if a < b]
        n += size
    return Graph.from_edges(n, edges)


def c5_blowup(sizes: Sequence[int]) -> Graph:
    """Replace each vertex of C5 by a clique of the given size."""
    if len(sizes) != 5 or min(sizes) < 1:
        raise ValueError("c5_blowup needs five positive bag sizes")
    bags, off = [], 0
    for s in sizes:
        bags.append(range(off, off + s))
        off += s
    edges = []
    for i, bag in enumerate(bags):
        nxt_bag = bags[(i + 1) % 5]
        edges += [(u, v) for u in bag for v in bag if u < v]
        edges += [(u, v) for u in bag for v in nxt_bag]
    return Graph.from_edges(off, edges)


@lru_cache(maxsize=1)
def _stored() -> dict[str, dict]:
    text = resources.files("p5k5e").joinpath("data/named_graphs.json").read_text()
    return json.loads(text)


def stored_graph(name: str) -> Graph:
    try:
        entry = _stored()[name]
    except KeyError:
        raise UnknownName(name) from None
    return parse_graph6(entry["graph6"])


# checklists


def _chi(g: Graph) -> int:
    return chromatic_number(g).chi


def _pendant_cliques_ok(t: int) -> Callable[[Graph], bool]:
    def ok(g: Graph) -> bool:
        q = (1 << t) - 1
        if not g.is_clique(q):
            return False
        for comp in connected_components(g, g.vertices & ~q):
            if not g.is_clique(comp):
                return False
            anchors = g.neighborhood(comp) & q
            if anchors.bit_count() != 1 or any(g.adj[v] & q != anchors for v in range(g.n) if comp >> v & 1):
                return False
        return True

    return ok


def _common(omega: int) -> list[Check]:
    return [
        ("connected", is_connected),
        ("in-class", is_in_class),
        (f"omega={omega}", lambda g: clique_number(g) == omega),
    ]


def _stored_checks(name: str) -> list[Check]:
    atom = ("no clique cutset", lambda g: not has_clique_cutset(g))
    imperfect = ("imperfect", lambda g: not is_perfect(g))
    alpha2 = ("alpha=2", lambda g: independence_number(g) == 2)
    chi5 = ("chi=5", lambda g: _chi(g) == 5)
    table: dict[str, list[Check]] = {
        "h_star": _common(6) + [imperfect, atom],
        "g1": _common(4) + [alpha2, chi5],
        "g2": _common(4) + [alpha2, chi5, ("contains F1", lambda g: contains(g, F1)), imperfect, atom],
        "g3": _common(5) + [("contains F2", lambda g: contains(g, F2)), chi5, imperfect, atom],
        "g4": _common(5) + [("contains F3", lambda g: contains(g, F3)), chi5, imperfect, atom],
    }
    return table[name]


_PATTERNS = {"f1": F1, "f2": F2, "f3": F3, "f4": F4, "f5": F5, "hvn": HVN}
STORED = ("h_star", "g1", "g2", "g3", "g4")
PARAMETRIC = ("perfect_family", "c5_blowup", "h_t")
NAMES = STORED + tuple(_PATTERNS) + PARAMETRIC


def build_with_checklist(spec: NamedConstruction) -> tuple[Graph, list[Check]]:
    name, params = spec.name, spec.params
    if name in STORED:
        _no_params(spec)
        return stored_graph(name), _stored_checks(name)
    if name in _PATTERNS:
        _no_params(spec)
        p = _PATTERNS[name]
        return p.as_graph(), [("in-class", is_in_class), ("is the pattern", lambda g: p.is_embedding(g, tuple(range(p.k))))]
    if name == "perfect_family":
        if not params:
            raise UnknownName("perfect_family needs t")
        t, rest = params[0], params[1:]
        if len(rest) % 2:
            raise UnknownName("perfect_family attachments come in (vertex, size) pairs")
        attach = tuple(zip(rest[::2], rest[1::2])) or ((0, 2),)
        checks = _common(t) + [
            ("perfect", is_perfect),
            ("pendant cliques on single Q vertices", _pendant_cliques_ok(t)),
        ]
        return perfect_family(t, attach), checks
    if name == "c5_blowup":
        g = c5_blowup(params)
        omega = max(params[i] + params[(i + 1) % 5] for i in range(5))
        return g, _common(omega) + [("alpha=2", lambda h: independence_number(h) == 2), ("imperfect", lambda h: not is_perfect(h))]
    if name == "h_t":
        if len(params) != 1 or params[0] < 1:
            raise UnknownName("h_t needs one parameter t >= 1")
        p = h_t(params[0])
        return p.as_graph(), [("in-class", is_in_class), (f"omega={params[0] + 3}", lambda g: clique_number(g) == params[0] + 3)]
    raise UnknownName(f"unknown construction {name!r}; known: {', '.join(NAMES)}")


def _no_params(spec: NamedConstruction) -> None:
    if spec.params:
        raise UnknownName(f"{spec.name} takes no parameters")


def run_checklist(g: Graph, checks: list[Check]) -> list[tuple[str, bool]]:
    return [(label, bool(pred(g))) for label, pred in checks]


def build_named(spec: NamedConstruction | str) -> Graph:
    """Build a named graph; raise :class:`ChecklistFailure` if any check fails."""
    if isinstance(spec, str):
        spec = NamedConstruction.parse(spec)
    g, checks = build_with_checklist(spec)
    failed = [label for label, ok in run_checklist(g, checks) if not ok]
    if failed:
        raise ChecklistFailure(str(spec), failed)
    return g
