"""Command-line front end.

Subcommands: ``construct``, ``check``, ``route``, ``bench``, ``oracle``.

Exit codes form a protocol so shell harnesses need no output parsing:
0 success / routing works, 1 semantic negative (not shattered, stuck route,
wrong method for the input shape, no oracle solution), 2 parse error,
3 disconnected input, 4 vertex-id mismatch, 5 size guard.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .categories import is_internally_connected, is_shattered
from .construct import (
    construct_auto,
    construct_graph_categories,
    construct_path_categories,
)
from .errors import (
    CategoryFormatError,
    DisconnectedGraphError,
    GraphFormatError,
    IdMismatchError,
    SizeGuardError,
)
from .fileio import load_categories, load_graph, save_categories
from .graph import diameter, is_connected
from .oracle import brute_force_min_memdim
from .routing import route, verify_all_pairs

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_ID_MISMATCH = 4
EXIT_GUARD = 5


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_construct(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if not is_connected(g):
        raise DisconnectedGraphError("construction requires a connected graph")
    if args.method == "auto":
        system, _, method = construct_auto(g)
    elif args.method == "path":
        system, method = construct_path_categories(g), "path"
    elif args.method == "tree":
        if g.n > 1 and g.m != g.n - 1:
            raise ValueError("input graph is not a tree")
        system, _ = construct_graph_categories(g)
        method = "tree"
    else:
        system, _ = construct_graph_categories(g)
        method = "graph"
    save_categories(system, args.out)
    diam = diameter(g)
    print(
        f"n={g.n} m={g.m} diam={diam} memdim={system.memdim()} "
        f"bound={bench_mod.reference_bound(diam, g.n)} method={method} "
        f"categories={len(system)}"
    )
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    system = load_categories(args.categories, g.n)
    if not is_connected(g):
        raise DisconnectedGraphError("check requires a connected graph")
    shattered = is_shattered(g, system)
    internal = is_internally_connected(g, system)
    report = verify_all_pairs(g, system)
    if not args.quiet:
        if shattered.ok:
            print("shattered: yes")
        else:
            print(f"shattered: no (pair {shattered.violation[0]}->{shattered.violation[1]})")
        if internal.ok:
            print("internally connected: yes")
        else:
            print(f"internally connected: no (category {internal.violation})")
        print(f"membership dimension: {system.memdim()}")
        if report.works:
            print("routing works: yes")
        else:
            print(
                f"routing works: no (no next hop for "
                f"{report.first_failure[0]}->{report.first_failure[1]})"
            )
    print(
        f"shattered={_fmt_bool(shattered.ok)} "
        f"internally_connected={_fmt_bool(internal.ok)} "
        f"memdim={system.memdim()} works={_fmt_bool(report.works)} "
        f"pairs_checked={report.pairs_checked} max_route={report.max_route_len} "
        f"mean_route={report.mean_route_len:.3f} max_stretch={report.max_stretch:.3f}"
    )
    return EXIT_OK if report.works else EXIT_NEGATIVE


def cmd_route(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    system = load_categories(args.categories, g.n)
    for name, v in (("src", args.src), ("dst", args.dst)):
        if not (0 <= v < g.n):
            raise IdMismatchError(f"{name} vertex {v} out of range [0,{g.n})")
    result = route(g, system, args.src, args.dst)
    for k, (v, d) in enumerate(zip(result.path, result.distances)):
        print(f"hop {k}: {v} (d={d})")
    if result.delivered:
        if not args.quiet:
            print(f"delivered in {result.hops()} hops")
        return EXIT_OK
    print(f"stuck at {result.stuck_at} ({result.stuck_reason})")
    return EXIT_NEGATIVE


def cmd_bench(args: argparse.Namespace) -> int:
    gens = [x.strip() for x in args.gen.split(",") if x.strip()]
    sizes = [int(x) for x in args.n.split(",") if x.strip()]
    seeds = list(range(args.seed, args.seed + args.seeds))
    records = bench_mod.run_bench(gens, sizes, seeds)
    with open(args.out, "w", encoding="utf-8") as fh:
        bench_mod.write_csv(records, fh)
    if not args.quiet:
        print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if not is_connected(g):
        raise DisconnectedGraphError("oracle requires a connected graph")
    found = brute_force_min_memdim(
        g, max_dim=args.max_dim, connected_only=not args.all_subsets
    )
    if found is None:
        print(f"no system with memdim <= {args.max_dim} found")
        return EXIT_NEGATIVE
    system, memdim = found
    print(f"min memdim = {memdim}")
    if not args.quiet:
        for c in system.categories:
            print("category " + " ".join(map(str, c)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catroute",
        description="Category systems over graphs that make greedy routing work.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a category system for a graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--method", choices=("auto", "path", "tree", "graph"), default="auto")
    p.add_argument("--out", required=True, help="output category file")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="verify shattered/connectivity/routing properties")
    p.add_argument("graph")
    p.add_argument("categories")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("route", help="trace one greedy route")
    p.add_argument("graph")
    p.add_argument("categories")
    p.add_argument("src", type=int)
    p.add_argument("dst", type=int)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("bench", help="run the generator sweep and emit CSV")
    p.add_argument("--gen", default="tree", help="comma-separated generator names")
    p.add_argument("--n", required=True, help="comma-separated sizes")
    p.add_argument("--seeds", type=int, default=1, help="number of seeds per size")
    p.add_argument("--seed", type=int, default=0, help="first seed value")
    p.add_argument("--out", required=True, help="output CSV file")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="exhaustive minimum membership dimension (tiny n)")
    p.add_argument("graph")
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument(
        "--all-subsets",
        action="store_true",
        help="allow disconnected candidate categories",
    )
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CategoryFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except IdMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ID_MISMATCH
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
