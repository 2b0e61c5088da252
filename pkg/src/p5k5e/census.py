"""Census runs: stream graphs through the colouring pipeline and check bounds.

Every connected in-class graph in a stream is coloured and checked against
the exact oracle. Failures are recorded in the report, never raised.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .canon import canonical_hash, certificate
from .decompose import has_clique_cutset
from .generate import GENERATOR_MAX_N, connected_levels, enumerate_all, enumerate_connected
from .graph import Graph, TooLarge, clique_number, is_connected, parse_graph6, to_graph6
from .oracle import ORACLE_MAX_N, chromatic_number
from .patterns import in_class, in_class_generic
from .structure import (
    cobipartite_coloring,
    color_bound,
    color_connected_report,
    triad_partition,
    validate_triad_claims,
)

__all__ = [
    "CensusConfig",
    "CensusReport",
    "census_stream",
    "check_graph",
    "enumerate_connected",
    "injected_large_omega",
    "random_cobipartite",
    "random_graph",
    "read_graph6_stream",
    "search_witness",
    "verify_bounds",
]


@dataclass(frozen=True)
class CensusConfig:
    exact_max_n: int = ORACLE_MAX_N
    check_claims: bool = True
    check_detectors: bool = False
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass
class CensusReport:
    n_min: int | None = None
    n_max: int | None = None
    seen: int = 0
    connected: int = 0
    in_class: int = 0
    omega_ge_7: int = 0
    cobipartite_checked: int = 0
    exact_checked: int = 0
    fallbacks: int = 0
    branch_histogram: Counter = field(default_factory=Counter)
    violations: list[tuple[str, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "CensusReport") -> None:
        for attr in ("seen", "connected", "in_class", "omega_ge_7", "cobipartite_checked", "exact_checked", "fallbacks"):
            setattr(self, attr, getattr(self, attr) + getattr(other, attr))
        for attr, pick in (("n_min", min), ("n_max", max)):
            mine, theirs = getattr(self, attr), getattr(other, attr)
            setattr(self, attr, theirs if mine is None else mine if theirs is None else pick(mine, theirs))
        self.branch_histogram.update(other.branch_histogram)
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["branch_histogram"] = dict(sorted(self.branch_histogram.items()))
        d["violations"] = [list(v) for v in self.violations]
        d["ok"] = self.ok
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"orders          {self.n_min}..{self.n_max}",
            f"graphs seen     {self.seen}",
            f"connected       {self.connected}",
            f"in class        {self.in_class}",
            f"omega >= 7      {self.omega_ge_7}",
            f"exact checked   {self.exact_checked}",
            f"co-bipartite    {self.cobipartite_checked}",
            f"fallbacks       {self.fallbacks}",
            f"violations      {len(self.violations)}",
            f"seconds         {self.seconds:.2f}",
            "branch histogram:",
        ]
        lines += [f"  {name:<28} {count}" for name, count in sorted(self.branch_histogram.items())]
        lines += [f"VIOLATION {g6} {reason}" for g6, reason in self.violations]
        return "\n".join(lines)


def _least_triangle(g: Graph) -> tuple[int, int, int] | None:
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                common = (g.adj[a] & g.adj[b]) >> (b + 1)
                if common:
                    return a, b, b + 1 + ((common & -common).bit_length() - 1)
    return None


def check_graph(g: Graph, config: CensusConfig = CensusConfig()) -> CensusReport:
    """Run every census check on one graph."""
    rep = CensusReport(n_min=g.n, n_max=g.n, seen=1)
    g6 = to_graph6(g)

    def fail(reason: str) -> None:
        rep.violations.append((g6, reason))

    ok, _, _ = in_class(g)
    if config.check_detectors:
        generic_ok, _, _ = in_class_generic(g)
        if ok != generic_ok:
            fail(f"fast and generic detectors disagree ({ok} vs {generic_ok})")
    if not is_connected(g):
        return rep
    rep.connected = 1
    if not ok:
        return rep
    rep.in_class = 1
    omega = clique_number(g)
    try:
        result = color_connected_report(g)
    except Exception as exc:  # a crash is recorded, not propagated
        fail(f"pipeline raised {exc!r}")
        return rep
    rep.branch_histogram.update(result.branches)
    rep.fallbacks = len(result.fallbacks)
    for msg in result.fallbacks:
        fail(f"structural fallback: {msg}")
    col = result.coloring
    if not col.is_proper(g):
        fail("improper colouring")
    if col.k > color_bound(omega):
        fail(f"{col.k} colours exceed max(7, omega={omega})")
    chi = None
    if g.n <= config.exact_max_n:
        chi = chromatic_number(g, max_n=config.exact_max_n).chi
        rep.exact_checked = 1
        if col.k < chi:
            fail(f"{col.k} colours below chi={chi}")
    if omega >= 7:
        rep.omega_ge_7 = 1
        if not has_clique_cutset(g) and cobipartite_coloring(g) is None:
            fail("omega >= 7 atom that is not co-bipartite")
    cob = cobipartite_coloring(g)
    if cob is not None and chi is not None:
        rep.cobipartite_checked = 1
        if cob.k != chi:
            fail(f"co-bipartite colouring uses {cob.k}, chi={chi}")
    if config.check_claims:
        tri = _least_triangle(g)
        if tri is not None:
            for claim in validate_triad_claims(g, triad_partition(g, tri)):
                fail(f"claim on {tri}: {claim}")
    return rep


def _check_batch(args: tuple[list[str], CensusConfig]) -> CensusReport:
    lines, config = args
    rep = CensusReport()
    for line in lines:
        rep.merge(check_graph(parse_graph6(line), config))
    return rep


def verify_bounds(stream: Iterable[Graph], config: CensusConfig = CensusConfig()) -> CensusReport:
    """Check every graph of ``stream``; with ``jobs > 1`` shards run in worker processes.

    Graphs are sharded by canonical hash and shard reports are merged in shard
    order, so the result does not depend on scheduling.
    """
    start = time.perf_counter()
    report = CensusReport()
    if config.jobs == 1:
        for g in stream:
            report.merge(check_graph(g, config))
    else:
        shards: list[list[str]] = [[] for _ in range(config.jobs * 4)]
        for g in stream:
            shards[canonical_hash(g) % len(shards)].append(to_graph6(g))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for part in pool.map(_check_batch, [(s, config) for s in shards]):
                report.merge(part)
    report.violations.sort()
    report.seconds = time.perf_counter() - start
    return report


# streams


def census_stream(max_n: int, min_n: int = 1, connected_only: bool = False) -> Iterator[Graph]:
    """Every graph (or every connected graph) of order ``min_n``..``max_n`` up to isomorphism."""
    if max_n > GENERATOR_MAX_N:
        raise TooLarge(f"internal generator stops at n={GENERATOR_MAX_N}; pipe larger orders as graph6")
    if connected_only:
        for n, level in enumerate(connected_levels(max_n), start=1):
            if n >= min_n:
                yield from level
    else:
        for n in range(max(min_n, 0), max_n + 1):
            yield from enumerate_all(n)


def read_graph6_stream(lines: Iterable[str], max_n: int | None = None) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        g = parse_graph6(line) if max_n is None else parse_graph6(line, max_n)
        yield g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_cobipartite(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Two cliques of random sizes with random edges between them."""
    a = rng.randint(0, n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u < a) == (v < a)]
    edges += [(u, v) for u in range(a) for v in range(a, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def injected_large_omega(max_n: int = 10, seed: int = 0, samples: int = 400) -> list[Graph]:
    """In-class connected graphs containing K7 or K8, up to ``max_n`` vertices.

    Starting from K7 and K8, vertices with random neighbourhoods are attached
    while the graph stays in class; duplicates are dropped by certificate.
    """
    rng = random.Random(seed)
    out: dict[tuple[int, ...], Graph] = {}
    for base in (7, 8):
        for _ in range(samples):
            g = Graph.complete(base)
            while g.n < max_n:
                for _attempt in range(30):
                    nbrs = rng.randrange(1, 1 << g.n)
                    h = g.add_vertex(nbrs)
                    if in_class(h)[0]:
                        g = h
                        break
                else:
                    break
                cert = certificate(g)
                out.setdefault(cert, Graph._trusted(g.n, cert))
    return [out[c] for c in sorted(out, key=lambda c: (len(c), c))]


# witness search

Predicate = Callable[[Graph], bool]


def search_witness(
    predicate: Predicate,
    n_min: int,
    n_max: int,
    hereditary: Predicate | None = None,
    connected: bool = True,
) -> Graph | None:
    """First graph in generation order satisfying ``predicate``.

    ``hereditary`` prunes generation and must itself be hereditary.
    Orders above the generator limit are reached by one-vertex extensions of
    the last generated level.
    """
    levels = connected_levels(min(n_max, GENERATOR_MAX_N), hereditary) if connected else None
    if connected:
        level: list[Graph] = []
        for n, level in enumerate(levels, start=1):
            if n >= n_min:
                for g in level:
                    if predicate(g):
                        return g
        n = GENERATOR_MAX_N
        while n < n_max:
            n += 1
            seen: dict[tuple[int, ...], Graph] = {}
            for g in level:
                for nbrs in range(1, 1 << g.n):
                    h = g.add_vertex(nbrs)
                    if hereditary is not None and not hereditary(h):
                        continue
                    cert = certificate(h)
                    if cert not in seen:
                        seen[cert] = Graph._trusted(h.n, cert)
            level = [seen[c] for c in sorted(seen)]
            if n >= n_min:
                for g in level:
                    if predicate(g):
                        return g
        return None
    if n_max > GENERATOR_MAX_N:
        raise TooLarge("disconnected witness search stops at the generator limit")
    for n in range(n_min, n_max + 1):
        for g in enumerate_all(n, hereditary):
            if predicate(g):
                return g
    return None


def random_extensions(
    base: Graph,
    n_max: int,
    rng: random.Random,
    keep: Predicate = lambda g: in_class(g)[0],
    attempts: int = 40,
) -> Iterator[Graph]:
    """Grow ``base`` one random vertex at a time, yielding each graph kept.

    Stops when ``n_max`` is reached or no attempt passes ``keep``.
    """
    g = base
    while g.n < n_max:
        for _ in range(attempts):
            h = g.add_vertex(rng.randrange(1, 1 << g.n))
            if keep(h):
                g = h
                yield g
                break
        else:
            return
