"""Exhaustive oracles for tiny instances and counterexample search.

``brute_force_min_memdim`` finds the smallest membership dimension of any
category system for which routing works, by iterative deepening over the
per-vertex membership cap with branch-and-bound. It makes no use of the
theoretical lower bound, so tests can verify that bound against it.

``find_ic_shattered_failure`` searches for a connected graph and category
system that are internally connected and shattered yet have a routing dead
end; such instances exist on general graphs (but never on trees).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

import numpy as np

from .categories import CategorySystem, is_internally_connected, is_shattered
from .errors import SizeGuardError
from .graph import Graph, is_connected
from .routing import verify_all_pairs

MAX_ORACLE_N = 6
MAX_ORACLE_DIM = 4


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected_subset(g: Graph, mask: int) -> bool:
    first = (mask & -mask).bit_length() - 1
    seen = 1 << first
    stack = [first]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            b = 1 << v
            if mask & b and not (seen & b):
                seen |= b
                stack.append(v)
    return seen == mask


def _works_masks(adj: Sequence[Sequence[int]], vm: Sequence[int]) -> bool:
    n = len(adj)
    for t in range(n):
        tm = vm[t]
        dcol = [(tm & ~vm[u]).bit_count() for u in range(n)]
        for u in range(n):
            if u == t:
                continue
            du = dcol[u]
            if all(dcol[v] >= du for v in adj[u]):
                return False
    return True


def brute_force_min_memdim(
    g: Graph, max_dim: int = MAX_ORACLE_DIM, connected_only: bool = True
) -> Optional[tuple[CategorySystem, int]]:
    """Minimum membership dimension over all systems where routing works.

    Searches membership caps 1, 2, ... up to ``max_dim``; within a cap it
    enumerates families of candidate categories depth-first, pruning branches
    that overrun a vertex's cap or can no longer give every ordered pair a
    distinguishing category. With ``connected_only`` (the default) candidate
    categories are restricted to connected vertex subsets; switch it off to
    probe the unrestricted optimum.

    Returns ``(system, memdim)`` for the first system found at the lowest
    feasible cap, or None when nothing works within ``max_dim``. Guarded to
    ``n <= 6`` and ``max_dim <= 4``; the search space is exponential.
    """
    n = g.n
    if n > MAX_ORACLE_N:
        raise SizeGuardError(f"oracle limited to n <= {MAX_ORACLE_N}, got {n}")
    if max_dim > MAX_ORACLE_DIM or max_dim < 0:
        raise SizeGuardError(f"max_dim must be in [0, {MAX_ORACLE_DIM}]")
    if n == 0:
        raise ValueError("empty graph")
    if n == 1:
        return CategorySystem(1, []), 0

    cands = [m for m in range(1, 1 << n)]
    if connected_only:
        cands = [m for m in cands if _connected_subset(g, m)]

    # pair coverage: routing requires every ordered pair (u, t) to have some
    # category containing t but not u, a monotone necessary condition.
    pairs = [(u, t) for u in range(n) for t in range(n) if u != t]
    pair_index = {p: i for i, p in enumerate(pairs)}
    all_pairs = (1 << len(pairs)) - 1
    cover = []
    for cm in cands:
        pm = 0
        for u, t in pairs:
            if (cm >> t) & 1 and not ((cm >> u) & 1):
                pm |= 1 << pair_index[(u, t)]
        cover.append(pm)
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | cover[i]

    adj = g.adjacency
    vm = [0] * n
    counts = [0] * n
    chosen: list[int] = []

    def dfs(i: int, covered: int, cap: int, at_cap: bool) -> Optional[list[int]]:
        if covered | suffix[i] != all_pairs:
            return None
        if i == len(cands):
            return None
        # branch: include candidate i
        cm = cands[i]
        if all(counts[v] < cap for v in _bits(cm)):
            bit = 1 << len(chosen)
            hits_cap = False
            for v in _bits(cm):
                vm[v] |= bit
                counts[v] += 1
                if counts[v] == cap:
                    hits_cap = True
            chosen.append(cm)
            # families whose max membership is below the cap were already
            # ruled out at the previous deepening level
            if (at_cap or hits_cap) and _works_masks(adj, vm):
                return list(chosen)
            found = dfs(i + 1, covered | cover[i], cap, at_cap or hits_cap)
            if found is not None:
                return found
            chosen.pop()
            for v in _bits(cm):
                vm[v] &= ~bit
                counts[v] -= 1
        # branch: skip candidate i
        return dfs(i + 1, covered, cap, at_cap)

    for cap in range(1, max_dim + 1):
        found = dfs(0, 0, cap, cap == 1)
        if found is not None:
            system = CategorySystem(n, [list(_bits(m)) for m in found])
            return system, cap
    return None


def _grow_connected_subset(g: Graph, rng: np.random.Generator, size: int) -> int:
    start = int(rng.integers(0, g.n))
    mask = 1 << start
    frontier = list(g.adjacency[start])
    members = 1
    while members < size and frontier:
        pick = int(rng.integers(0, len(frontier)))
        v = frontier.pop(pick)
        if mask & (1 << v):
            continue
        mask |= 1 << v
        members += 1
        frontier.extend(x for x in g.adjacency[v] if not (mask & (1 << x)))
    return mask


def _random_connected_graph(n: int, rng: np.random.Generator, trees_only: bool) -> Graph:
    from .generators import random_tree

    tree_seed = int(rng.integers(0, 2**63))
    g = random_tree(n, tree_seed)
    if trees_only:
        return g
    kind = int(rng.integers(0, 3))
    if kind == 0:
        # cycle with optional chords
        edges = [(i, (i + 1) % n) for i in range(n)]
        present = {(min(u, v), max(u, v)) for u, v in edges}
        for _ in range(int(rng.integers(0, 3))):
            u = int(rng.integers(0, n))
            v = int(rng.integers(0, n))
            if u != v and (min(u, v), max(u, v)) not in present:
                present.add((min(u, v), max(u, v)))
                edges.append((u, v))
        return Graph.from_edges(edges, n=n)
    if kind == 1:
        return g  # plain random tree
    # random tree plus a few extra edges
    present = {(min(u, v), max(u, v)) for u, v in g.edges()}
    edges = list(present)
    for _ in range(int(rng.integers(1, 4))):
        u = int(rng.integers(0, n))
        v = int(rng.integers(0, n))
        if u != v and (min(u, v), max(u, v)) not in present:
            present.add((min(u, v), max(u, v)))
            edges.append((u, v))
    return Graph.from_edges(edges, n=n)


def _shattered_masks(g: Graph, cats: Sequence[int]) -> bool:
    n = g.n
    nbr = [0] * n
    for u in range(n):
        acc = 0
        for v in g.adjacency[u]:
            acc |= 1 << v
        nbr[u] = acc
    reach = []
    for cm in cats:
        acc = 0
        for v in _bits(cm):
            acc |= nbr[v]
        reach.append(acc)
    for t in range(n):
        ok = 0
        tb = 1 << t
        for ci, cm in enumerate(cats):
            if cm & tb:
                ok |= reach[ci] & ~cm
        if ok | tb != (1 << n) - 1:
            return False
    return True


def find_ic_shattered_failure(
    max_n: int = 8,
    trials: int = 10**6,
    seed: int = 7,
    trees_only: bool = False,
) -> Optional[tuple[Graph, CategorySystem]]:
    """Search for (graph, system) that is internally connected and shattered
    but where greedy routing has a dead end.

    Runs a deterministic sweep over tiny instances (n = 4, families of up to
    four connected subsets) followed by up to ``trials`` seeded random
    instances with n from 5 to ``max_n`` and connected-by-construction
    categories. Returns the first hit, or None when the budget is exhausted.
    With ``trees_only`` the random phase draws only trees, where no hit can
    exist (internally connected + shattered guarantees routing there).
    """
    if max_n > 8:
        raise SizeGuardError("search limited to max_n <= 8")

    def finish(g: Graph, cats: Sequence[int]) -> tuple[Graph, CategorySystem]:
        system = CategorySystem(g.n, [list(_bits(m)) for m in cats])
        assert is_internally_connected(g, system).ok
        assert is_shattered(g, system).ok
        assert not verify_all_pairs(g, system).works
        return g, system

    # deterministic tiny sweep
    if not trees_only and max_n >= 4:
        n = 4
        all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for emask in range(1 << len(all_edges)):
            edges = [e for i, e in enumerate(all_edges) if emask >> i & 1]
            if len(edges) < n - 1:
                continue
            g = Graph.from_edges(edges, n=n)
            if not is_connected(g):
                continue
            conn = [m for m in range(1, 1 << n) if _connected_subset(g, m)]
            adj = g.adjacency
            for r in range(1, 5):
                for fam in combinations(conn, r):
                    if not _shattered_masks(g, fam):
                        continue
                    vm = [0] * n
                    for ci, cm in enumerate(fam):
                        for v in _bits(cm):
                            vm[v] |= 1 << ci
                    if not _works_masks(adj, vm):
                        return finish(g, fam)

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, 1))))
    lo = 4 if trees_only else 5
    for _ in range(trials):
        n = int(rng.integers(lo, max_n + 1))
        g = _random_connected_graph(n, rng, trees_only)
        count = int(rng.integers(max(3, n - 1), 2 * n + 1))
        cats = []
        for _ in range(count):
            size = int(rng.integers(2, n))
            cats.append(_grow_connected_subset(g, rng, size))
        cats = sorted(set(cats))
        if not _shattered_masks(g, cats):
            continue
        vm = [0] * n
        for ci, cm in enumerate(cats):
            for v in _bits(cm):
                vm[v] |= 1 << ci
        if not _works_masks(g.adjacency, vm):
            return finish(g, cats)
    return None
