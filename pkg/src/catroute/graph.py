"""Undirected graphs, shortest paths, spanning trees, and rooted-tree machinery.

Vertex ids are dense integers ``0..n-1``. All structures are immutable after
construction and all functions are pure, so everything here is safe to share
across threads.
"""

from __future__ import annotations

import bisect
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DisconnectedGraphError, GraphFormatError

UNREACHABLE = None  # marker used in bfs_distances output


class Graph:
    """Simple undirected graph over vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted, duplicate-free tuple of neighbors of
    ``v``. Symmetry (``v in adjacency[u]`` iff ``u in adjacency[v]``) is
    enforced at construction.
    """

    __slots__ = ("n", "adjacency")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        if len(adjacency) != n:
            raise GraphFormatError(
                f"adjacency has {len(adjacency)} rows for n={n}"
            )
        adj = []
        for u, row in enumerate(adjacency):
            row = tuple(row)
            for v in row:
                if not (0 <= v < n):
                    raise GraphFormatError(f"neighbor id {v} out of range [0,{n})")
                if v == u:
                    raise GraphFormatError(f"self-loop at vertex {u}")
            if list(row) != sorted(set(row)):
                raise GraphFormatError(
                    f"neighbor list of {u} must be sorted and duplicate-free"
                )
            adj.append(row)
        for u in range(n):
            for v in adj[u]:
                if not _contains_sorted(adj[v], u):
                    raise GraphFormatError(f"edge {u}-{v} missing its reverse")
        self.n = n
        self.adjacency = tuple(adj)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: Optional[int] = None) -> "Graph":
        """Build a graph from an undirected edge list.

        With explicit ``n``, ids must lie in ``[0, n)`` and isolated vertices
        are allowed. Without it, ``n`` is inferred as ``1 + max id`` and every
        id in ``[0, n)`` must occur in some edge: gaps are rejected rather
        than compacted, so vertex ids stay aligned with category files.
        """
        edges = [(int(u), int(v)) for u, v in edges]
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            if u < 0 or v < 0:
                raise GraphFormatError("vertex ids must be non-negative")
        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
            used = {x for e in edges for x in e}
            for x in range(n):
                if x not in used:
                    raise GraphFormatError(
                        f"vertex id {x} never occurs (gaps are rejected; "
                        f"declare isolated vertices with an explicit n)"
                    )
        else:
            for u, v in edges:
                if u >= n or v >= n:
                    raise GraphFormatError(
                        f"edge {u}-{v} exceeds declared vertex count n={n}"
                    )
        rows: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            rows[u].append(v)
            rows[v].append(u)
        return cls(n, [sorted(r) for r in rows])

    @property
    def m(self) -> int:
        """Number of undirected edges."""
        return sum(len(r) for r in self.adjacency) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _contains_sorted(row: tuple[int, ...], x: int) -> bool:
    i = bisect.bisect_left(row, x)
    return i < len(row) and row[i] == x


def bfs_distances(g: Graph, s: int) -> tuple[Optional[int], ...]:
    """Hop counts from ``s`` to every vertex; ``None`` where unreachable."""
    if not (0 <= s < g.n):
        raise ValueError(f"source {s} out of range [0,{g.n})")
    dist: list[Optional[int]] = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = du + 1
                q.append(v)
    return tuple(dist)


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches everything (n<=1 counts)."""
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def is_path(g: Graph) -> bool:
    """True iff the graph is a simple path (n=1 counts, n=0 does not)."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    if g.m != g.n - 1:
        return False
    degs = [g.degree(v) for v in range(g.n)]
    if max(degs) > 2 or sum(1 for d in degs if d == 1) != 2:
        return False
    return is_connected(g)


def diameter(g: Graph) -> int:
    """Maximum shortest-path length over all pairs, by BFS from every vertex."""
    if g.n == 0:
        raise DisconnectedGraphError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        for d in bfs_distances(g, s):
            if d is None:
                raise DisconnectedGraphError("graph is not connected")
            if d > best:
                best = d
    return best


def double_sweep(g: Graph) -> tuple[int, int, int]:
    """Two-phase BFS: returns ``(a, b, dist(a, b))``.

    ``a`` is the vertex farthest from vertex 0 and ``b`` the vertex farthest
    from ``a`` (lowest id on ties). On trees the returned distance equals the
    diameter exactly; in general it is a lower bound.
    """
    if g.n == 0:
        raise DisconnectedGraphError("empty graph")
    d0 = bfs_distances(g, 0)
    a = _farthest(d0)
    d1 = bfs_distances(g, a)
    b = _farthest(d1)
    dist = d1[b]
    assert dist is not None
    return a, b, dist


def _farthest(dist: Sequence[Optional[int]]) -> int:
    best, best_d = 0, -1
    for v, d in enumerate(dist):
        if d is None:
            raise DisconnectedGraphError("graph is not connected")
        if d > best_d:
            best, best_d = v, d
    return best


def choose_bfs_root(g: Graph) -> int:
    """Midpoint of a longest double-sweep path; a good low-height BFS root.

    BFS from vertex 0 finds the farthest vertex ``a``; BFS from ``a`` finds
    the farthest vertex ``b`` and parent pointers; the midpoint of the
    ``a``-to-``b`` path is returned. All ties break to the lowest id.
    """
    if g.n == 0:
        raise DisconnectedGraphError("empty graph")
    if g.n == 1:
        return 0
    d0 = bfs_distances(g, 0)
    a = _farthest(d0)
    dist: list[Optional[int]] = [None] * g.n
    parent = [-1] * g.n
    dist[a] = 0
    q = deque([a])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = du + 1
                parent[v] = u
                q.append(v)
    b = _farthest(dist)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()  # a ... b
    length = len(path) - 1
    if length % 2 == 0:
        return path[length // 2]
    return min(path[(length - 1) // 2], path[(length + 1) // 2])


class RootedTree:
    """Rooted tree with parent/children arrays and per-vertex statistics.

    ``children[v]`` preserves construction order; for binary trees slot 0 is
    the left child and slot 1 the right child (a single child occupies the
    left slot). ``depth`` counts hops from the root, ``height`` is the length
    of the longest downward path, and ``subtree_size`` counts descendants
    including the vertex itself.
    """

    __slots__ = ("n", "root", "parent", "children", "depth", "height", "subtree_size")

    def __init__(self, root: int, children: Sequence[Sequence[int]]):
        n = len(children)
        if not (0 <= root < n):
            raise ValueError(f"root {root} out of range [0,{n})")
        parent: list[Optional[int]] = [None] * n
        kids: list[tuple[int, ...]] = []
        for u, row in enumerate(children):
            row = tuple(row)
            for v in row:
                if not (0 <= v < n):
                    raise ValueError(f"child id {v} out of range [0,{n})")
                if parent[v] is not None or v == root:
                    raise ValueError(f"vertex {v} has two parents or is the root")
                parent[v] = u
            kids.append(row)
        # BFS from root assigns depths and proves the parent structure spans
        # all n vertices without cycles.
        depth = [-1] * n
        depth[root] = 0
        order = [root]
        q = deque([root])
        while q:
            u = q.popleft()
            for v in kids[u]:
                depth[v] = depth[u] + 1
                order.append(v)
                q.append(v)
        if len(order) != n:
            raise ValueError("children lists do not span all vertices from the root")
        height = [0] * n
        size = [1] * n
        for u in reversed(order):
            for v in kids[u]:
                size[u] += size[v]
                if height[v] + 1 > height[u]:
                    height[u] = height[v] + 1
        self.n = n
        self.root = root
        self.parent = tuple(parent)
        self.children = tuple(kids)
        self.depth = tuple(depth)
        self.height = tuple(height)
        self.subtree_size = tuple(size)

    @property
    def is_binary(self) -> bool:
        return all(len(c) <= 2 for c in self.children)

    def left(self, v: int) -> Optional[int]:
        c = self.children[v]
        return c[0] if len(c) >= 1 else None

    def right(self, v: int) -> Optional[int]:
        c = self.children[v]
        return c[1] if len(c) >= 2 else None

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the root path of ``v`` (every vertex is its
        own ancestor)."""
        while self.depth[v] > self.depth[u]:
            v = self.parent[v]  # type: ignore[assignment]
        return u == v

    def lca(self, u: int, v: int) -> int:
        """Lowest common ancestor by depth-equalizing walk."""
        while self.depth[u] > self.depth[v]:
            u = self.parent[u]  # type: ignore[assignment]
        while self.depth[v] > self.depth[u]:
            v = self.parent[v]  # type: ignore[assignment]
        while u != v:
            u = self.parent[u]  # type: ignore[assignment]
            v = self.parent[v]  # type: ignore[assignment]
        return u

    def ancestors(self, v: int) -> tuple[int, ...]:
        """Proper ancestors of ``v``, parent first, root last."""
        out = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return tuple(out)

    def as_graph(self) -> Graph:
        """The undirected tree viewed as a Graph."""
        return Graph.from_edges(
            [(u, v) for u in range(self.n) for v in self.children[u]],
            n=self.n,
        )

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root})"


def bfs_spanning_tree(g: Graph, root: int) -> RootedTree:
    """BFS spanning tree; depth of every vertex equals its BFS distance.

    Neighbors are visited in ascending id order, so the result is
    deterministic and children lists come out sorted.
    """
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} out of range [0,{g.n})")
    children: list[list[int]] = [[] for _ in range(g.n)]
    seen = [False] * g.n
    seen[root] = True
    q = deque([root])
    reached = 1
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                children[u].append(v)
                reached += 1
                q.append(v)
    if reached != g.n:
        raise DisconnectedGraphError("graph is not connected")
    return RootedTree(root, children)
