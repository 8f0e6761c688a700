"""Seeded random graph generators and deterministic fixtures.

Randomness comes from numpy's PCG64 via ``SeedSequence``, so every generator
is reproducible from its integer seed and retries can derive independent
substreams with ``(seed, attempt)`` entropy without correlations.
"""

from __future__ import annotations

import heapq
from typing import Sequence, Union

import numpy as np

from .graph import Graph, is_connected

SeedLike = Union[int, Sequence[int]]


def _rng(seed: SeedLike) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def random_tree(n: int, seed: SeedLike) -> Graph:
    """Uniform random labeled tree (random sequence decoding).

    A uniform sequence of ``n - 2`` vertex labels is decoded into its tree:
    repeatedly join the smallest remaining leaf to the next label. Bijective
    with labeled trees, hence uniform.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Graph.from_edges([], n=1)
    if n == 2:
        return Graph.from_edges([(0, 1)])
    seq = _rng(seed).integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(edges, n=n)


def erdos_renyi_connected(
    n: int, p: float, seed: SeedLike, max_retries: int = 200
) -> Graph:
    """G(n, p) resampled until connected; each retry uses a fresh substream."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must be in [0, 1]")
    base = (seed,) if isinstance(seed, int) else tuple(seed)
    for attempt in range(max_retries):
        rng = _rng(base + (attempt,))
        edges = []
        for u in range(n):
            draws = rng.random(n - u - 1)
            for j, r in enumerate(draws):
                if r < p:
                    edges.append((u, u + 1 + j))
        g = Graph.from_edges(edges, n=n)
        if is_connected(g):
            return g
    raise RuntimeError(
        f"no connected G({n},{p}) sample within {max_retries} retries"
    )


def watts_strogatz(n: int, k: int, p: float, seed: SeedLike) -> Graph:
    """Small-world ring lattice with random rewiring.

    Starts from the ring where each vertex connects to its ``k/2`` nearest
    neighbors on each side, then rewires the far endpoint of each lattice
    edge with probability ``p``. The result can be disconnected for large
    ``p``; callers needing connectivity should resample.
    """
    if k % 2 != 0:
        raise ValueError("k must be even")
    if not (0 < k < n):
        raise ValueError("k must satisfy 0 < k < n")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must be in [0, 1]")
    rng = _rng(seed)
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            neighbors[u].add(v)
            neighbors[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            old = (u + j) % n
            if rng.random() >= p:
                continue
            if len(neighbors[u]) >= n - 1:
                continue  # saturated; nothing to rewire to
            w = int(rng.integers(0, n))
            while w == u or w in neighbors[u]:
                w = int(rng.integers(0, n))
            neighbors[u].discard(old)
            neighbors[old].discard(u)
            neighbors[u].add(w)
            neighbors[w].add(u)
    edges = [(u, v) for u in range(n) for v in neighbors[u] if u < v]
    return Graph.from_edges(edges, n=n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges([(0, i) for i in range(1, n)], n=n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges(
        [(u, v) for u in range(n) for v in range(u + 1, n)], n=n
    )


def complete_binary_tree(n: int) -> Graph:
    """Heap-shaped binary tree: vertex i has children 2i+1 and 2i+2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges(
        [(i, (i - 1) // 2) for i in range(1, n)], n=n
    )
