"""Command-line front end: ingest edge lists, answer queries, run benchmarks.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 vertex-range or
unsupported-operation error, 4 differential/selftest failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import (
    STRUCTURE_NAMES,
    DifferentialMismatch,
    WorkloadSpec,
    run_workload,
    scaling_sweep,
)
from .core import (
    CapacityError,
    ConfigError,
    GraphStoreError,
    HASH_MODES,
    StoreConfig,
    UnsupportedOperationError,
    VertexRangeError,
)
from .edgehash import EdgeHash
from .formats import GraphFile, ParseError, format_results, parse_edge_list, parse_queries
from .hashlist import HashList
from .multilist import MultiList
from .oracle import ORACLE_MAX_VERTICES, OracleGraph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_SELFTEST = 4

SELFTEST_SPEC = WorkloadSpec(generator="uniform", n=1000, m=100_000, seed=0xC0FFEE)


class UsageError(GraphStoreError):
    """Bad flags or flag combinations."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage to 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphstores", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    query = sub.add_parser("query", help="build a store from an edge list and answer queries")
    query.add_argument("graph", help="edge-list file ('n m' header, then 'x y [weight]' lines)")
    query.add_argument("queries", help="query file ('C x y' or 'N x' lines)")
    query.add_argument("--structure", choices=STRUCTURE_NAMES, default="hashlist")
    query.add_argument("--hash-mode", choices=HASH_MODES, default="mixer")
    query.add_argument("--out", help="result file path (default: stdout)")
    query.add_argument(
        "--undirected", action="store_true",
        help="insert both (x, y) and (y, x) for every edge line",
    )
    query.set_defaults(func=cmd_query)

    bench = sub.add_parser("bench", help="run an instrumented workload and emit a CSV report")
    bench.add_argument("--gen", choices=("uniform", "star", "grid"), default="uniform")
    bench.add_argument("--n", type=int, required=True, help="vertex count")
    bench.add_argument("--m", type=int, required=True, help="total operation count")
    bench.add_argument(
        "--mix", default="0.6,0.2,0.15,0.05",
        help="add,contains-hit,contains-miss,enumerate fractions",
    )
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--structures", default="hashlist,multilist,edgehash")
    bench.add_argument("--hash-mode", choices=HASH_MODES, default="mixer")
    bench.add_argument("--sweep", help="comma-separated size multipliers, e.g. 1,2,4")
    bench.add_argument("--out", help="CSV path (default: stdout)")
    bench.set_defaults(func=cmd_bench)

    selftest = sub.add_parser(
        "selftest", help="run the differential suite (all structures vs oracle)"
    )
    selftest.set_defaults(func=cmd_selftest)

    return parser


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _build_query_store(structure: str, graph: GraphFile, hash_mode: str, undirected: bool):
    capacity = graph.m * 2 if undirected else graph.m
    if structure == "multilist":
        return MultiList(graph.n, capacity)
    if structure == "oracle":
        if graph.n > ORACLE_MAX_VERTICES:
            raise UnsupportedOperationError(
                f"oracle is capped at {ORACLE_MAX_VERTICES} vertices, got n={graph.n}"
            )
        return OracleGraph(graph.n)
    cfg = StoreConfig(
        vertex_count=graph.n,
        expected_edges=max(1, capacity),
        hash_mode=hash_mode,
        weighted=structure == "hashlist" and graph.has_weights,
    )
    return HashList(cfg) if structure == "hashlist" else EdgeHash(cfg)


def cmd_query(args) -> int:
    graph = parse_edge_list(Path(args.graph).read_text(encoding="utf-8"))
    queries = parse_queries(Path(args.queries).read_text(encoding="utf-8"))
    store = _build_query_store(args.structure, graph, args.hash_mode, args.undirected)

    weighted = isinstance(store, HashList) and store.config.weighted
    for x, y, w in graph.edges:
        store.add_edge(x, y)
        if weighted and w is not None:
            store.set_weight(x, y, w)
        if args.undirected:
            store.add_edge(y, x)
            if weighted and w is not None:
                store.set_weight(y, x, w)

    results = []
    for q in queries:
        if q[0] == "C":
            results.append("1" if store.contains(q[1], q[2]) else "0")
        else:
            if isinstance(store, OracleGraph):
                seq = store.neighbors_newest_first(q[1])
            else:
                seq = store.neighbors(q[1])  # EdgeHash raises UnsupportedOperationError
            results.append(" ".join(str(v) for v in seq))

    _write_output(format_results(results), args.out)
    return EXIT_OK


def _parse_mix(text: str) -> tuple[float, float, float, float]:
    try:
        parts = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"--mix must be comma-separated numbers, got {text!r}") from None
    if len(parts) != 4:
        raise UsageError("--mix needs exactly four fractions")
    return parts


def cmd_bench(args) -> int:
    structures = tuple(s.strip() for s in args.structures.split(",") if s.strip())
    for name in structures:
        if name not in STRUCTURE_NAMES:
            raise UsageError(f"unknown structure {name!r}; choose from {STRUCTURE_NAMES}")
    if "oracle" in structures and args.n > ORACLE_MAX_VERTICES:
        raise UsageError(f"oracle is capped at {ORACLE_MAX_VERTICES} vertices, got --n {args.n}")

    spec = WorkloadSpec(
        generator=args.gen, n=args.n, m=args.m, mix=_parse_mix(args.mix), seed=args.seed
    )
    if args.sweep:
        try:
            factors = [int(f) for f in args.sweep.split(",")]
        except ValueError:
            raise UsageError(f"--sweep must be comma-separated integers, got {args.sweep!r}") from None
        results = scaling_sweep(spec, factors, structures, args.hash_mode)
        lines = [results[0][1].to_csv().splitlines()[0]]
        for _, report in results:
            lines.extend(report.to_csv().splitlines()[1:])
        _write_output("\n".join(lines) + "\n", args.out)
    else:
        report = run_workload(spec, structures, args.hash_mode)
        _write_output(report.to_csv(), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    spec = SELFTEST_SPEC
    print(
        f"selftest: {spec.m} ops, generator={spec.generator}, n={spec.n}, "
        f"seed={spec.seed:#x}, structures={','.join(STRUCTURE_NAMES)}"
    )
    try:
        report = run_workload(spec, STRUCTURE_NAMES)
    except DifferentialMismatch as exc:
        print("selftest: FAIL")
        print(exc)
        return EXIT_SELFTEST
    for name in STRUCTURE_NAMES:
        counts = {op: report.find(name, op).count_ops for op in ("add", "contains", "enumerate")}
        print(
            f"  {name:<9} add={counts['add']} contains={counts['contains']} "
            f"enumerate={counts['enumerate']}"
        )
    print("selftest: PASS")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (VertexRangeError, CapacityError, UnsupportedOperationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except DifferentialMismatch as exc:
        print(f"differential failure: {exc}", file=sys.stderr)
        return EXIT_SELFTEST


if __name__ == "__main__":
    sys.exit(main())
