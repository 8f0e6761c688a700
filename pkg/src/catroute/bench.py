"""Benchmark harness: membership dimension versus diameter across graph families.

Each instance is generated from a named family, run through the automatic
construction, and verified; a failed verification aborts the run since the
constructions guarantee success. Records report the measured membership
dimension against the reference envelope ``(diam + ceil(log2 n))**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Sequence

from .construct import construct_auto
from .errors import DisconnectedGraphError
from .generators import (
    complete_binary_tree,
    complete_graph,
    erdos_renyi_connected,
    path_graph,
    random_tree,
    star_graph,
    watts_strogatz,
)
from .graph import Graph, diameter, is_connected
from .routing import verify_all_pairs

CSV_HEADER = "generator,seed,n,m,diam,memdim,bound,max_route,mean_route,max_stretch"

GENERATOR_NAMES = ("tree", "er", "ws", "path", "star", "complete", "cbt")

WS_K = 4
WS_P = 0.1


@dataclass(frozen=True)
class BenchRecord:
    generator: str
    seed: int
    n: int
    m: int
    diam: int
    memdim: int
    bound: int
    max_route: int
    mean_route: float
    max_stretch: float


def reference_bound(diam: int, n: int) -> int:
    """The reference envelope ``(diam + ceil(log2 n))**2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (diam + (n - 1).bit_length()) ** 2


def make_graph(generator: str, n: int, seed: int) -> Graph:
    """Generate one connected instance of the named family."""
    if generator == "tree":
        return random_tree(n, seed)
    if generator == "er":
        p = min(1.0, 2.0 * math.log(n) / n) if n > 1 else 0.0
        return erdos_renyi_connected(n, p, seed)
    if generator == "ws":
        for attempt in range(200):
            g = watts_strogatz(n, WS_K, WS_P, (seed, attempt))
            if is_connected(g):
                return g
        raise RuntimeError(f"no connected ws({n},{WS_K},{WS_P}) within 200 retries")
    if generator == "path":
        return path_graph(n)
    if generator == "star":
        return star_graph(n)
    if generator == "complete":
        return complete_graph(n)
    if generator == "cbt":
        return complete_binary_tree(n)
    raise ValueError(f"unknown generator {generator!r}; choose from {GENERATOR_NAMES}")


def bench_instance(g: Graph, generator: str, seed: int) -> BenchRecord:
    """Construct, verify, and measure one instance.

    Raises RuntimeError if verification fails: the constructions promise
    success on every connected graph, so a failure is a library bug.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("benchmark instances must be connected")
    system, _, _ = construct_auto(g)
    report = verify_all_pairs(g, system)
    if not report.works:
        raise RuntimeError(
            f"construction failed verification on {generator} n={g.n} seed={seed}: "
            f"first failure {report.first_failure}"
        )
    diam = diameter(g)
    memdim = system.memdim()
    if memdim < diam:
        raise RuntimeError(
            f"membership dimension {memdim} below diameter {diam} on a working "
            f"system; this should be impossible"
        )
    if report.max_route_len > memdim:
        raise RuntimeError("route longer than the membership dimension")
    return BenchRecord(
        generator=generator,
        seed=seed,
        n=g.n,
        m=g.m,
        diam=diam,
        memdim=memdim,
        bound=reference_bound(diam, g.n),
        max_route=report.max_route_len,
        mean_route=report.mean_route_len,
        max_stretch=report.max_stretch,
    )


def run_bench(
    generators: Sequence[str], sizes: Sequence[int], seeds: Sequence[int]
) -> list[BenchRecord]:
    """Run the sweep and return records sorted by (generator, n, seed)."""
    records = []
    for gen in generators:
        for n in sizes:
            for seed in seeds:
                records.append(bench_instance(make_graph(gen, n, seed), gen, seed))
    records.sort(key=lambda r: (r.generator, r.n, r.seed))
    return records


def format_record(r: BenchRecord) -> str:
    return (
        f"{r.generator},{r.seed},{r.n},{r.m},{r.diam},{r.memdim},{r.bound},"
        f"{r.max_route},{r.mean_route:.3f},{r.max_stretch:.3f}"
    )


def write_csv(records: Sequence[BenchRecord], out: IO[str]) -> None:
    out.write(CSV_HEADER + "\n")
    for r in records:
        out.write(format_record(r) + "\n")
