"""Command-line interface: ``python -m p5k5e <command> ...``.

Exit status: 0 on success, 1 when a census or check finds violations,
2 on usage or input errors (including colouring a graph outside the class).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Callable, Iterator
from typing import TextIO

from .census import (
    CensusConfig,
    census_stream,
    injected_large_omega,
    random_cobipartite,
    read_graph6_stream,
    search_witness,
    verify_bounds,
)
from .constructions import NAMES, NamedConstruction, build_with_checklist, run_checklist
from .decompose import Disconnected, has_clique_cutset
from .generate import GENERATOR_MAX_N
from .graph import (
    Graph,
    GraphError,
    clique_number,
    independence_number,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .oracle import chromatic_number
from .patterns import class_report, in_class, is_in_class, is_perfect, iter_induced, library, pattern_by_name
from .structure import OutOfClass, cobipartite_coloring, color_bound, color_graph_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
PERFECTION_MAX_N = 12
CONFIG_KEYS = {"format", "max_n", "min_n", "jobs", "seed", "pattern", "name", "input_format", "limit", "random", "inject", "predicate"}


class UsageError(Exception):
    pass


# input


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return "# n=" in text


def read_graphs(source: TextIO, input_format: str, max_n: int | None = None) -> Iterator[Graph]:
    text = source.read()
    fmt = input_format
    if fmt == "auto":
        fmt = "edges" if _looks_like_edge_list(text) else "graph6"
    if fmt == "edges":
        yield parse_edge_list(text)
    else:
        yield from read_graph6_stream(text.splitlines(), max_n)


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# output


def _emit(out: TextIO, fmt: str, record: dict, text: Callable[[dict], str]) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(text(record) + "\n")


def _kv_text(record: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}" for k, v in record.items())


# commands


def cmd_analyze(args, out: TextIO) -> int:
    with _open_input(args.input) as src:
        for g in read_graphs(src, args.input_format):
            rep = class_report(g)
            record = {
                "graph6": to_graph6(g),
                "n": g.n,
                "in_class": rep.in_class,
                "witness_pattern": rep.witness_pattern,
                "witness": list(rep.witness) if rep.witness else None,
                "omega": rep.omega,
                "alpha": rep.alpha,
                "connected": rep.is_connected,
                "clique_cutset": has_clique_cutset(g) if rep.is_connected and g.n else None,
                "cobipartite": cobipartite_coloring(g) is not None,
                "perfect": is_perfect(g) if g.n <= PERFECTION_MAX_N else None,
            }
            _emit(out, args.format, record, _kv_text)
    return EXIT_OK


def cmd_color(args, out: TextIO) -> int:
    with _open_input(args.input) as src:
        for g in read_graphs(src, args.input_format):
            try:
                result = color_graph_report(g)
            except OutOfClass as exc:
                raise UsageError(f"graph is not (P5, K5-e)-free: induced {exc.pattern} on {list(exc.witness)}") from None
            omega = clique_number(g) if g.n else 0
            col = result.coloring
            record = {
                "k": col.k,
                "colors": list(col.colors),
                "omega": omega,
                "guarantee": "<= max(7, omega)",
                "bound": color_bound(omega),
                "branches": result.branches,
            }
            _emit(out, args.format, record, lambda r: f"k={r['k']} omega={r['omega']} bound={r['bound']}\n" + col.to_text().rstrip())
    return EXIT_OK


def cmd_find(args, out: TextIO) -> int:
    if not args.pattern:
        raise UsageError("find needs --pattern; known: " + ", ".join(sorted(library())))
    try:
        p = pattern_by_name(args.pattern)
    except KeyError:
        raise UsageError(f"unknown pattern {args.pattern!r}; known: {', '.join(sorted(library()))}") from None
    with _open_input(args.input) as src:
        for g in read_graphs(src, args.input_format):
            found = []
            for emb in iter_induced(g, p):
                found.append(dict(zip(p.labels, emb)))
                if args.limit and len(found) >= args.limit:
                    break
            record = {"graph6": to_graph6(g), "pattern": p.name, "labels": list(p.labels), "embeddings": found}
            _emit(
                out,
                args.format,
                record,
                lambda r: "\n".join([f"{r['pattern']}: {len(r['embeddings'])} embedding(s)"] + [" ".join(f"{k}={v}" for k, v in e.items()) for e in r["embeddings"]]),
            )
    return EXIT_OK


def cmd_build(args, out: TextIO) -> int:
    if not args.name:
        raise UsageError("build needs --name; known: " + ", ".join(NAMES))
    spec = NamedConstruction.parse(args.name)
    g, checks = build_with_checklist(spec)
    results = run_checklist(g, checks)
    record = {"name": str(spec), "n": g.n, "graph6": to_graph6(g), "checklist": {k: v for k, v in results}}
    failed = [k for k, ok in results if not ok]
    _emit(out, args.format, record, lambda r: r["graph6"])
    if failed:
        print(f"checklist failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_census(args, out: TextIO) -> int:
    config = CensusConfig(jobs=args.jobs)
    streams = []
    if args.input is not None:
        src = _open_input(args.input)
        streams.append(list(read_graph6_stream(src, args.max_n)))
    else:
        max_n = 7 if args.max_n is None else args.max_n
        if max_n > GENERATOR_MAX_N:
            raise UsageError(f"--max-n above {GENERATOR_MAX_N} needs a graph6 input stream")
        streams.append(census_stream(max_n, args.min_n))
    if args.inject:
        streams.append(injected_large_omega(10, seed=args.seed))
    if args.random:
        rng = random.Random(args.seed)
        streams.append([random_cobipartite(rng.randint(2, 10), rng) for _ in range(args.random)])

    def chained() -> Iterator[Graph]:
        for s in streams:
            yield from s

    report = verify_bounds(chained(), config)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _chi(g: Graph) -> int:
    return chromatic_number(g).chi


WITNESS_PREDICATES: dict[str, tuple[str, Callable[[Graph], bool]]] = {
    "h_star": (
        "connected, in class, omega 6, imperfect, no clique cutset",
        lambda g: clique_number(g) == 6 and not has_clique_cutset(g) and not is_perfect(g),
    ),
    "omega4_chi5": (
        "connected, in class, omega 4, alpha 2, chi 5",
        lambda g: clique_number(g) == 4 and independence_number(g) == 2 and _chi(g) == 5,
    ),
    "omega7_atom": (
        "connected, in class, omega >= 7, no clique cutset, not co-bipartite",
        lambda g: clique_number(g) >= 7 and not has_clique_cutset(g) and cobipartite_coloring(g) is None,
    ),
    "contradiction": (
        "in class and contains K5-e",
        lambda g: not in_class(g)[0] and in_class(g)[1] == "K5-e",
    ),
}


def cmd_witness(args, out: TextIO) -> int:
    if args.predicate not in WITNESS_PREDICATES:
        raise UsageError(f"unknown predicate {args.predicate!r}; known: {', '.join(WITNESS_PREDICATES)}")
    desc, pred = WITNESS_PREDICATES[args.predicate]
    max_n = 8 if args.max_n is None else args.max_n
    if max_n > 10:
        raise UsageError("witness search is limited to n <= 10")
    g = search_witness(pred, args.min_n, max_n, hereditary=is_in_class)
    record = {
        "predicate": args.predicate,
        "description": desc,
        "range": [args.min_n, max_n],
        "found": g is not None,
        "graph6": to_graph6(g) if g is not None else None,
    }
    _emit(out, args.format, record, lambda r: r["graph6"] or f"no witness for n in {args.min_n}..{max_n}")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "color": cmd_color,
    "find": cmd_find,
    "build": cmd_build,
    "census": cmd_census,
    "witness": cmd_witness,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--config", help="file of key=value lines supplying option defaults")
    parser = argparse.ArgumentParser(prog="p5k5e", description="Colouring and structure tools for (P5, K5-e)-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="graph6 lines or an edge list; '-' for stdin")
        p.add_argument("--input-format", choices=("auto", "graph6", "edges"), default="auto")

    p = sub.add_parser("analyze", parents=[common], help="class membership and basic invariants")
    with_input(p)
    p = sub.add_parser("color", parents=[common], help="colour with at most max(7, omega) colours")
    with_input(p)
    p = sub.add_parser("find", parents=[common], help="induced embeddings of a named pattern")
    with_input(p)
    p.add_argument("--pattern")
    p.add_argument("--limit", type=int, default=0, help="stop after this many embeddings (0: all)")
    p = sub.add_parser("build", parents=[common], help="graph6 of a named construction")
    p.add_argument("--name", help="e.g. h_star, g1, perfect_family(8), c5_blowup(2,2,2,2,1)")
    p = sub.add_parser("census", parents=[common], help="verify colouring bounds over a graph stream")
    p.add_argument("--input", default=None, help="graph6 stream instead of the internal generator")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject", action="store_true", help="add in-class graphs containing K7 or K8, n <= 10")
    p.add_argument("--random", type=int, default=0, help="add this many random co-bipartite graphs")
    p = sub.add_parser("witness", parents=[common], help="search for the first graph meeting a predicate")
    p.add_argument("--predicate", default="h_star", help=", ".join(WITNESS_PREDICATES))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-n", type=int, default=1)
    return parser


def _read_config(path: str) -> dict[str, str]:
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected key=value with a known key")
        values[key] = value.strip()
    return values


def parse_args(argv: list[str] | None) -> argparse.Namespace:
    """Parse ``argv``; values from ``--config`` act as defaults that flags override."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.config:
        return args
    sub_parser = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction)).choices[args.command]
    actions = {a.dest: a for a in sub_parser._actions}
    defaults = {}
    for key, value in _read_config(args.config).items():
        action = actions.get(key)
        if action is None:
            raise UsageError(f"option {key} does not apply to {args.command}")
        if action.nargs == 0:
            defaults[key] = value.lower() in ("1", "true", "yes")
            continue
        converted = action.type(value) if action.type else value
        if action.choices and converted not in action.choices:
            raise UsageError(f"config value {value!r} not allowed for {key}")
        defaults[key] = converted
    sub_parser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args, out)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except (UsageError, GraphError, Disconnected, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
