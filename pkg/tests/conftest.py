"""Shared test helpers: independent oracles kept deliberately naive."""

from __future__ import annotations

import itertools

from catroute import CategorySystem, Graph


class DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def union_find_internally_connected(g: Graph, s: CategorySystem) -> bool:
    """Independent connectivity oracle: union endpoints of edges inside each
    category and count roots."""
    for c in s.categories:
        members = set(c)
        dsu = DisjointSet(members)
        for u in members:
            for v in g.adjacency[u]:
                if v in members:
                    dsu.union(u, v)
        if len({dsu.find(x) for x in members}) != 1:
            return False
    return True


def naive_shattered(g: Graph, s: CategorySystem) -> bool:
    """Direct triple loop over ordered pairs, neighbors, and categories."""
    for s0, t in itertools.permutations(range(g.n), 2):
        if not any(
            u in c_set and t in c_set and s0 not in c_set
            for u in g.adjacency[s0]
            for c_set in map(set, s.categories)
        ):
            return False
    return True


def naive_works(g: Graph, s: CategorySystem) -> bool:
    """Direct check of the universal no-dead-end condition."""
    for u, t in itertools.permutations(range(g.n), 2):
        du = s.cat_distance(u, t)
        if not any(s.cat_distance(v, t) < du for v in g.adjacency[u]):
            return False
    return True


def all_connected_graphs(n: int):
    """Every connected labeled graph on n vertices, by edge-subset sweep."""
    all_edges = list(itertools.combinations(range(n), 2))
    from catroute import is_connected

    for bits in range(1 << len(all_edges)):
        edges = [e for i, e in enumerate(all_edges) if bits >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph.from_edges(edges, n=n)
        if is_connected(g):
            yield g
