"""Command-line entry points: solve, census, scan, cache-server, game-server."""

from __future__ import annotations

import argparse
import sys

from . import census as census_mod
from . import graph6, scans
from .cache import CacheClient, CacheServer
from .engine import MemoTable, analyze, classify, nim_value
from .graph import Action, Graph
from .theory import Outcome


def _parse_edges(text: str) -> Graph:
    """Edge-list spec 'n:u-v,u-v,...', e.g. '4:0-1,1-2,2-3'."""
    head, _, rest = text.partition(":")
    n = int(head)
    edges = []
    if rest:
        for part in rest.split(","):
            u, _, v = part.partition("-")
            edges.append((int(u), int(v)))
    return Graph(n, edges)


def _graph_from_args(args) -> Graph:
    if args.g6 is not None:
        return graph6.decode(args.g6)
    if args.edges is not None:
        return _parse_edges(args.edges)
    if args.family:
        from .webapi import build_graph_spec  # shared family table

        return build_graph_spec(
            {"family": args.family[0], "args": args.family[1:]}
        )
    raise ValueError("give one of --g6 / --edges / --family")


def _make_memo(args) -> MemoTable:
    remote = None
    if getattr(args, "cache", None):
        host, _, port = args.cache.rpartition(":")
        remote = CacheClient(host or "127.0.0.1", int(port))
    return MemoTable(slots_log2=getattr(args, "table_bits", 20), remote=remote)


def cmd_solve(args) -> int:
    try:
        g = _graph_from_args(args)
    except (ValueError, graph6.MalformedGraph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    memo = _make_memo(args)
    value = nim_value(g, memo)
    outcome = "N" if classify(g, memo) is Outcome.N_POSITION else "P"
    print(f"graph: n={g.n} m={g.m}")
    print(f"value: {value}")
    print(f"outcome: {outcome}")
    if args.analyze:
        result = analyze(g, memo)
        for mv, v in result.per_move:
            act = "delete" if mv.action is Action.DELETE else "contract"
            print(f"  {act} {mv.edge[0]}-{mv.edge[1]} -> {v}")
    return 0


def cmd_census(args) -> int:
    memo = _make_memo(args)
    if args.input:
        graphs = list(census_mod.ingest_graph6(args.input))
    else:
        try:
            graphs = census_mod.enumerate_biconnected(args.n)
        except census_mod.TooLargeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    dist = census_mod.distribution(graphs, memo, jobs=args.jobs)
    lines = dist.to_lines()
    if args.output:
        with open(args.output, "w", encoding="ascii") as out:
            out.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    ns = sorted({n for (n, _, _) in dist.entries})
    for n in ns:
        print(f"# n={n}: {dist.total(n)} graphs, max value {dist.max_value(n)}")
        for m in sorted({em for (en, em, _) in dist.entries if en == n}):
            print(f"#   n={n} m={m}: {dist.total(n, m)} graphs")
    if args.reference:
        ref = census_mod.load_reference()
        diffs = census_mod.compare_reference(dist, ref, ns=ns)
        if diffs:
            print(f"# reference diff: {len(diffs)} rows differ")
            for d in diffs:
                print(f"#   {d}")
            return 1
        print("# reference diff: exact match")
    return 0


def cmd_scan(args) -> int:
    try:
        cls = scans.GraphClass(args.cls)
    except ValueError:
        names = ", ".join(c.value for c in scans.GraphClass)
        print(f"error: unknown class {args.cls!r} (one of: {names})", file=sys.stderr)
        return 2
    memo = _make_memo(args)
    if args.input:
        graphs = census_mod.ingest_graph6(args.input)
    elif cls is scans.GraphClass.GIRTH5_PLUS:
        graphs = census_mod.enumerate_biconnected_ear(args.n_max, min_girth=5)
    elif cls is scans.GraphClass.CUBIC_TRIANGLE_FREE:
        graphs = census_mod.enumerate_biconnected_ear(
            args.n_max, min_girth=4, max_degree=3
        )
    elif cls is scans.GraphClass.COMPLETE_BIPARTITE_P3:
        from .families import complete_bipartite_graph

        graphs = [complete_bipartite_graph(3, q) for q in range(3, args.n_max - 2)]
    else:
        graphs = (
            g
            for n in range(3, min(args.n_max, 8) + 1)
            for g in census_mod.enumerate_biconnected(n)
        )
    report = scans.scan_class(cls, args.n_max, graphs, memo)
    for line in report.to_lines():
        print(line)
    return 0


def cmd_cache_server(args) -> int:
    host, _, port = args.bind.rpartition(":")
    server = CacheServer(host or "127.0.0.1", int(port), persistence_path=args.persist)
    print(f"cache server listening on {server.address[0]}:{server.address[1]}",
          flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


def cmd_game_server(args) -> int:
    import uvicorn

    from .webapi import create_app

    app = create_app(memo=_make_memo(args), hints=not args.no_hints)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nimors",
        description="Solve, census and play the edge deletion/contraction game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="value and outcome of one position")
    p.add_argument("--g6", help="graph6 line")
    p.add_argument("--edges", help="edge list 'n:u-v,u-v,...'")
    p.add_argument("--family", nargs="+", metavar=("NAME", "ARG"),
                   help="cycle K | path M | complete N | complete_bipartite P Q | "
                        "fused_cycle P Q | petersen")
    p.add_argument("--analyze", action="store_true", help="per-move value table")
    p.add_argument("--cache", help="remote cache host:port")
    p.add_argument("--table-bits", type=int, default=20,
                   help="local memo table size as log2 slots (1..25)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("census", help="value distribution over biconnected graphs")
    p.add_argument("n", type=int, nargs="?", default=0,
                   help="vertex count for built-in enumeration (3..8)")
    p.add_argument("--input", help="graph6 file instead of built-in enumeration")
    p.add_argument("--output", help="write distribution lines here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", help="remote cache host:port")
    p.add_argument("--table-bits", type=int, default=20,
                   help="local memo table size as log2 slots (1..25)")
    p.add_argument("--reference", action="store_true",
                   help="diff against the bundled reference (exit 1 on any diff)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", help="parity-heuristic scan over a graph class")
    p.add_argument("cls", metavar="class",
                   help="girth5 | cubic-trianglefree | property-s-odd | k3q | all")
    p.add_argument("n_max", type=int)
    p.add_argument("--input", help="graph6 file as the graph stream")
    p.add_argument("--cache", help="remote cache host:port")
    p.add_argument("--table-bits", type=int, default=20,
                   help="local memo table size as log2 slots (1..25)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("cache-server", help="run the memoization cache service")
    p.add_argument("--bind", default="127.0.0.1:7071", help="host:port")
    p.add_argument("--persist", help="append-only persistence file")
    p.set_defaults(func=cmd_cache_server)

    p = sub.add_parser("game-server", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--no-hints", action="store_true",
                   help="omit per-move values from /moves")
    p.add_argument("--cache", help="remote cache host:port")
    p.add_argument("--table-bits", type=int, default=20,
                   help="local memo table size as log2 slots (1..25)")
    p.set_defaults(func=cmd_game_server)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
