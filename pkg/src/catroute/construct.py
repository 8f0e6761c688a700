"""Category-system constructions that make greedy routing work.

Four constructions, from special to general:

* paths: prefix/suffix interval categories; membership dimension exactly the
  diameter.
* binary trees: per-vertex subtree categories plus families of depth-truncated
  split categories; membership dimension at most ``3 * (height + 1)**2``.
* arbitrary rooted trees: embed into a binary host tree with weight-balanced
  expansion of high-degree vertices, build the binary families there, then
  project back to the original vertices.
* connected graphs: build on a low-diameter BFS spanning tree; routing then
  works on the whole graph because tree neighbors remain graph neighbors.

The projection step for arbitrary trees does not simply intersect each host
category with the original vertex set: categories rooted at a balancing
(dummy) vertex would lose both their anchor and their witness role that way,
leaving sibling subtrees disconnected and unroutable. Instead, truncated
split sets of the dummies inside one vertex's expansion are merged per
(level, side, truncation depth) and anchored with that vertex, and
whole-subtree sets of dummies are dropped. On binary inputs no dummies exist
and the construction reduces to the plain binary one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .categories import CategorySystem
from .errors import DisconnectedGraphError
from .graph import (
    Graph,
    RootedTree,
    bfs_spanning_tree,
    choose_bfs_root,
    is_connected,
    is_path,
)

Shape = Union[int, tuple]  # leaf index, or (left, right) pair of shapes


def construct_path_categories(g: Graph) -> CategorySystem:
    """Interval categories along a path.

    Vertices are numbered by position from the endpoint with the smaller id;
    position ``i`` contributes the strict prefix ``{0..i-1}`` and the strict
    suffix ``{i+1..n-1}`` (as vertex sets). Every vertex lands in exactly
    ``n - 1`` categories, matching the diameter, and the result is shattered
    and internally connected.
    """
    n = g.n
    if n == 0:
        raise ValueError("cannot construct categories over the empty graph")
    if n == 1:
        return CategorySystem(1, [])
    if not is_path(g):
        raise ValueError("input graph is not a simple path")
    order = _path_order(g)
    sets: list[tuple[int, ...]] = []
    for i in range(1, n):
        sets.append(tuple(order[:i]))
    for i in range(n - 1):
        sets.append(tuple(order[i + 1:]))
    return CategorySystem(n, sets)


def _path_order(g: Graph) -> list[int]:
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    order = [start]
    prev = -1
    while len(order) < g.n:
        u = order[-1]
        nxt = [v for v in g.adjacency[u] if v != prev]
        prev = u
        order.append(nxt[0])
    return order


def build_weight_balanced(weights: Sequence[int]) -> Shape:
    """Binary shape tree over the given item weights, leaves in input order.

    The cumulative-weight interval ``[0, W)`` is bisected recursively; an
    item follows the side its interval midpoint falls on, and the shape only
    deepens when the item set actually splits. Because midpoints of adjacent
    items are at least ``w_i`` apart (doubled units), item ``i`` is isolated
    after at most ``ceil(log2(W / w_i)) + 1`` splits, which keeps every leaf
    within ``floor(log2(W / w_i)) + 2``.

    Returns a nested structure: an ``int`` is a leaf holding the item's
    index; a 2-tuple is an internal node.
    """
    ws = [int(w) for w in weights]
    if not ws:
        raise ValueError("at least one weight is required")
    if any(w < 1 for w in ws):
        raise ValueError("weights must be positive integers")
    k = len(ws)
    if k == 1:
        return 0
    pos = [0]
    for w in ws:
        pos.append(pos[-1] + w)
    total2 = 2 * pos[-1]
    centers = [pos[i] + pos[i + 1] for i in range(k)]  # doubled midpoints

    def rec(lo: int, hi: int, a: int, b: int, scale: int) -> Shape:
        # items lo..hi-1 whose doubled midpoints lie in [a, b) / 2**scale
        if hi - lo == 1:
            return lo
        mid2 = a + b  # midpoint is (a+b) / 2**(scale+1)
        shift = 1 << (scale + 1)
        split = lo
        while split < hi and centers[split] * shift < mid2:
            split += 1
        if split == lo:
            return rec(lo, hi, mid2, 2 * b, scale + 1)
        if split == hi:
            return rec(lo, hi, 2 * a, mid2, scale + 1)
        return (
            rec(lo, split, 2 * a, mid2, scale + 1),
            rec(split, hi, mid2, 2 * b, scale + 1),
        )

    return rec(0, k, 0, total2, 0)


def leaf_depths(shape: Shape) -> dict[int, int]:
    """Depth of every leaf index in a shape tree."""
    out: dict[int, int] = {}
    stack: list[tuple[Shape, int]] = [(shape, 0)]
    while stack:
        node, d = stack.pop()
        if isinstance(node, tuple):
            stack.append((node[0], d + 1))
            stack.append((node[1], d + 1))
        else:
            out[node] = d
    return out


@dataclass(frozen=True)
class Embedding:
    """Injection of a rooted tree into a binary host tree.

    ``forward_map[v]`` is the host id of original vertex ``v`` (originals
    keep their own ids; balancing dummies take ids from ``n`` upward).
    ``real_flags[h]`` is true exactly on the image of ``forward_map``.
    Ancestor/descendant relations are preserved in both directions, and
    ``depth(host of v) <= 2 * depth(v) + log2(n) + 2``.
    """

    binary: RootedTree
    forward_map: tuple[int, ...]
    real_flags: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(set(self.forward_map)) != len(self.forward_map):
            raise ValueError("forward_map must be injective")
        image = set(self.forward_map)
        for h, flag in enumerate(self.real_flags):
            if flag != (h in image):
                raise ValueError("real_flags must mark exactly the image of forward_map")
        if not self.binary.is_binary:
            raise ValueError("host tree must be binary")
        inverse: list[Optional[int]] = [None] * self.binary.n
        for v, h in enumerate(self.forward_map):
            inverse[h] = v
        object.__setattr__(self, "_inverse", tuple(inverse))

    def host_of(self, v: int) -> int:
        return self.forward_map[v]

    def original_of(self, h: int) -> Optional[int]:
        """Original vertex behind host ``h``, or None for a dummy."""
        return self._inverse[h]  # type: ignore[attr-defined]

    @property
    def dummy_count(self) -> int:
        return self.binary.n - len(self.forward_map)


def embed_into_binary_tree(t: RootedTree) -> Embedding:
    """Expand every vertex with more than two children through a
    weight-balanced shape over its children (weights = subtree sizes).

    Shape-internal positions become dummy vertices; the vertex itself takes
    the shape's root position, so each child ends up at host depth
    ``depth(parent) + O(log(subtree(parent) / subtree(child)))`` below it.
    Path expansions telescope, giving host depth at most
    ``2 * depth(v) + log2(n) + 2`` and host height ``O(height + log n)``.
    """
    n = t.n
    dummy_total = sum(max(0, len(t.children[v]) - 2) for v in range(n))
    nb = n + dummy_total
    children_h: list[list[int]] = [[] for _ in range(nb)]
    next_dummy = n

    for u in range(n):
        kids = t.children[u]
        if len(kids) <= 2:
            children_h[u] = list(kids)
            continue
        shape = build_weight_balanced([t.subtree_size[c] for c in kids])

        def attach(node: Shape) -> int:
            nonlocal next_dummy
            if isinstance(node, int):
                return kids[node]
            h = next_dummy
            next_dummy += 1
            children_h[h] = [attach(node[0]), attach(node[1])]
            return h

        assert isinstance(shape, tuple)  # k >= 3 always splits at the top
        children_h[u] = [attach(shape[0]), attach(shape[1])]

    host = RootedTree(t.root, children_h)
    return Embedding(
        binary=host,
        forward_map=tuple(range(n)),
        real_flags=tuple([True] * n + [False] * dummy_total),
    )


def _identity_embedding(t: RootedTree) -> Embedding:
    return Embedding(
        binary=t,
        forward_map=tuple(range(t.n)),
        real_flags=tuple([True] * t.n),
    )


def _split_family_sets(
    host: RootedTree,
    real: Sequence[bool],
    orig_of: Sequence[Optional[int]],
) -> Iterator[frozenset[int]]:
    """Generate all category sets (as original-vertex sets) for a host tree.

    Per real vertex ``w`` this yields its subtree set plus, for every level
    of split nodes inside ``w``'s expansion (the vertex itself at level 0,
    dummies below) and every truncation depth in range, one set holding
    ``w``, the full far sides, and the near sides cut off at that depth. On a
    host with no dummies this is exactly the binary-tree family.
    """
    depth = host.depth
    height = host.height
    children = host.children

    def real_desc(h: int) -> list[tuple[int, int]]:
        # (host depth, original id) of real vertices in host subtree of h
        out = []
        stack = [h]
        while stack:
            x = stack.pop()
            if real[x]:
                out.append((depth[x], orig_of[x]))
            stack.extend(children[x])
        return out

    for h in range(host.n):
        if not real[h]:
            continue
        w = orig_of[h]
        assert w is not None
        yield frozenset(o for _, o in real_desc(h))

        level = [h]
        delta = 0
        while level:
            slots: tuple[list[int], list[int]] = ([], [])
            for node in level:
                ch = children[node]
                if len(ch) >= 1:
                    slots[0].append(ch[0])
                if len(ch) == 2:
                    slots[1].append(ch[1])
            for near in (0, 1):
                near_children = slots[near]
                far_children = slots[1 - near]
                if not near_children:
                    continue
                rmin = depth[h] + delta
                rmax = rmin + max(height[c] for c in near_children)
                base = {w}
                for c in far_children:
                    base.update(o for _, o in real_desc(c))
                items: list[tuple[int, int]] = []
                for c in near_children:
                    items.extend(real_desc(c))
                items.sort()
                i = 0
                cur = set(base)
                for r in range(rmin, rmax + 1):
                    while i < len(items) and items[i][0] <= r:
                        cur.add(items[i][1])
                        i += 1
                    yield frozenset(cur)
            level = [c for node in level for c in children[node] if not real[c]]
            delta += 1


def construct_binary_tree_categories(t: RootedTree) -> CategorySystem:
    """Subtree sets plus depth-truncated split families on a binary tree.

    For each vertex: the set of its descendants (itself included), and for
    each side and each depth ``r`` from the vertex's own depth up to its
    depth plus the height of that side's child, the set holding the vertex,
    that side cut off at depth ``r``, and the whole other side. The result is
    shattered and internally connected, and its membership dimension is at
    most ``3 * (height + 1)**2``.
    """
    if not t.is_binary:
        raise ValueError("input tree is not binary (a vertex has more than 2 children)")
    emb = _identity_embedding(t)
    return CategorySystem(
        t.n, _split_family_sets(emb.binary, emb.real_flags, tuple(range(t.n)))
    )


def construct_tree_categories(t: RootedTree) -> CategorySystem:
    """Category system for an arbitrary rooted tree.

    Embeds the tree into a binary host, builds the binary families there,
    and projects host categories back to original vertices: subtree sets of
    real vertices project plainly, truncated split sets rooted at one
    vertex's dummies are merged per (level, side, depth) and anchored with
    that vertex, and dummy subtree sets are dropped. The result is shattered,
    internally connected, and has membership dimension
    O((2 * height + log2 n)**2).
    """
    emb = embed_into_binary_tree(t)
    orig_of = [emb.original_of(h) for h in range(emb.binary.n)]
    return CategorySystem(
        t.n, _split_family_sets(emb.binary, emb.real_flags, orig_of)
    )


def construct_graph_categories(g: Graph) -> tuple[CategorySystem, RootedTree]:
    """Category system for any connected graph, via a BFS spanning tree.

    The tree is rooted at the double-sweep midpoint to keep its height near
    half its diameter. Routing works on the whole graph because every tree
    neighbor is also a graph neighbor, so no vertex loses its strictly-closer
    next hop. Returns the system and the spanning tree used.
    """
    if g.n == 0:
        raise ValueError("cannot construct categories over the empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError("construct_graph_categories requires a connected graph")
    tree = bfs_spanning_tree(g, choose_bfs_root(g))
    return construct_tree_categories(tree), tree


def construct_auto(g: Graph) -> tuple[CategorySystem, Optional[RootedTree], str]:
    """Pick the construction by input shape.

    Paths get the interval construction (tight membership dimension equal to
    the diameter); everything else goes through the spanning-tree pipeline.
    Returns ``(system, spanning_tree_or_None, method_name)``.
    """
    if g.n == 0:
        raise ValueError("cannot construct categories over the empty graph")
    if g.n > 1 and is_path(g):
        return construct_path_categories(g), None, "path"
    system, tree = construct_graph_categories(g)
    method = "tree" if g.m == g.n - 1 else "graph"
    return system, tree, method
