import math

import pytest

from catroute import (
    Graph,
    RootedTree,
    bfs_spanning_tree,
    build_weight_balanced,
    choose_bfs_root,
    complete_graph,
    construct_auto,
    construct_binary_tree_categories,
    construct_graph_categories,
    construct_path_categories,
    construct_tree_categories,
    diameter,
    embed_into_binary_tree,
    is_internally_connected,
    is_shattered,
    leaf_depths,
    make_graph,
    path_graph,
    random_tree,
    star_graph,
    verify_all_pairs,
)


def verified(g, s):
    """All three guaranteed properties at once."""
    return (
        is_shattered(g, s).ok
        and is_internally_connected(g, s).ok
        and verify_all_pairs(g, s).works
    )


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

def test_path_three_exact_sets():
    s = construct_path_categories(path_graph(3))
    assert s.categories == ((0,), (0, 1), (1, 2), (2,))
    assert s.memdim() == 2


def test_path_two():
    s = construct_path_categories(path_graph(2))
    assert s.categories == ((0,), (1,))
    assert s.memdim() == 1


def test_path_single_vertex_has_no_categories():
    s = construct_path_categories(path_graph(1))
    assert len(s) == 0 and s.memdim() == 0


def test_path_memdim_equals_diameter():
    for n in range(2, 26):
        g = path_graph(n)
        s = construct_path_categories(g)
        assert s.memdim() == n - 1 == diameter(g)
        assert verified(g, s)


def test_path_orientation_uses_lowest_id_endpoint():
    # path 2-0-1: endpoints are 1 and 2, so positions start at vertex 1
    g = Graph.from_edges([(2, 0), (0, 1)])
    s = construct_path_categories(g)
    assert s.categories == ((0, 1), (0, 2), (1,), (2,))
    assert verified(g, s)


def test_path_rejects_non_path():
    with pytest.raises(ValueError):
        construct_path_categories(star_graph(4))
    with pytest.raises(ValueError):
        construct_path_categories(complete_graph(3))


# ---------------------------------------------------------------------------
# binary trees
# ---------------------------------------------------------------------------

def test_binary_three_vertex_exact():
    t = RootedTree(0, [[1, 2], [], []])
    s = construct_binary_tree_categories(t)
    assert s.categories == ((0, 1), (0, 1, 2), (0, 2), (1,), (2,))
    assert s.memdim() == 3
    # the witness for the ordered pair (1, 2): {0, 2} holds the parent and
    # the target but not the source
    assert (0, 2) in s.categories
    assert verified(t.as_graph(), s)


def test_binary_single_vertex():
    s = construct_binary_tree_categories(RootedTree(0, [[]]))
    assert s.categories == ((0,),)
    assert s.memdim() == 1


def test_binary_left_chain():
    t = RootedTree(0, [[1], [2], [3], []])
    s = construct_binary_tree_categories(t)
    h = t.height[0]
    assert s.memdim() <= 3 * (h + 1) ** 2
    assert verified(t.as_graph(), s)


def test_binary_rejects_wide_vertex():
    with pytest.raises(ValueError):
        construct_binary_tree_categories(RootedTree(0, [[1, 2, 3], [], [], []]))


def test_binary_memdim_bound_random():
    # random binary trees via the embedding of random trees
    for seed in range(20):
        base = bfs_spanning_tree(random_tree(4 + seed, seed), 0)
        host = embed_into_binary_tree(base).binary
        s = construct_binary_tree_categories(host)
        h = host.height[host.root]
        assert s.memdim() <= 3 * (h + 1) ** 2
        assert verified(host.as_graph(), s)


def test_binary_equals_tree_construction_on_binary_input():
    for seed in range(10):
        base = bfs_spanning_tree(random_tree(5 + seed, seed), 0)
        host = embed_into_binary_tree(base).binary
        assert construct_tree_categories(host) == construct_binary_tree_categories(host)


# ---------------------------------------------------------------------------
# weight-balanced shapes
# ---------------------------------------------------------------------------

def test_weight_balanced_uniform():
    shape = build_weight_balanced([1, 1, 1, 1])
    assert leaf_depths(shape) == {0: 2, 1: 2, 2: 2, 3: 2}


def test_weight_balanced_single():
    assert build_weight_balanced([1]) == 0
    assert leaf_depths(build_weight_balanced([7])) == {0: 0}


def test_weight_balanced_heavy_first():
    depths = leaf_depths(build_weight_balanced([8, 1, 1]))
    assert depths == {0: 1, 1: 2, 2: 2}
    # depth bound: floor(log2(10/8)) + 2 = 2 for the heavy item
    assert depths[0] <= math.floor(math.log2(10 / 8)) + 2


def test_weight_balanced_rejects_bad_input():
    with pytest.raises(ValueError):
        build_weight_balanced([])
    with pytest.raises(ValueError):
        build_weight_balanced([1, 0])


def test_weight_balanced_depth_bound_assorted():
    cases = [
        [1, 3, 1, 5, 1],
        [2, 100, 16, 8, 1000, 100, 64, 8, 1, 8, 1000, 64, 8, 100, 1000, 1],
        [2**i for i in range(12)],
        [2**(11 - i) for i in range(12)],
        [1] * 33,
    ]
    for ws in cases:
        total = sum(ws)
        depths = leaf_depths(build_weight_balanced(ws))
        for i, w in enumerate(ws):
            assert depths[i] <= math.floor(math.log2(total / w)) + 2


def test_weight_balanced_deterministic():
    ws = [3, 1, 4, 1, 5, 9, 2, 6]
    assert build_weight_balanced(ws) == build_weight_balanced(ws)


# ---------------------------------------------------------------------------
# embedding
# ---------------------------------------------------------------------------

def test_embed_star_four_leaves():
    t = RootedTree(0, [[1, 2, 3, 4], [], [], [], []])
    emb = embed_into_binary_tree(t)
    assert emb.dummy_count == 2
    assert emb.binary.is_binary
    assert all(emb.binary.depth[emb.forward_map[v]] <= 3 for v in range(5))
    assert emb.forward_map == (0, 1, 2, 3, 4)
    assert emb.original_of(5) is None  # a dummy


def test_embed_binary_input_is_identity():
    t = RootedTree(0, [[1, 2], [3], [], []])
    emb = embed_into_binary_tree(t)
    assert emb.dummy_count == 0
    assert emb.forward_map == (0, 1, 2, 3)
    assert emb.binary.children == t.children


def test_embed_caterpillar_preserves_ancestry():
    # spine 0-1-2-3-4, one leaf hanging off each spine vertex
    children = [[1, 5], [2, 6], [3, 7], [4, 8], [9], [], [], [], [], []]
    t = RootedTree(0, children)
    emb = embed_into_binary_tree(t)
    B = emb.binary
    for u in range(t.n):
        for v in range(t.n):
            assert t.is_ancestor(u, v) == B.is_ancestor(
                emb.forward_map[u], emb.forward_map[v]
            )


def test_embed_depth_bound():
    for seed in range(30):
        n = 3 + 2 * seed
        tree = bfs_spanning_tree(random_tree(n, seed), choose_bfs_root(random_tree(n, seed)))
        emb = embed_into_binary_tree(tree)
        for v in range(n):
            assert (
                emb.binary.depth[emb.forward_map[v]]
                <= 2 * tree.depth[v] + math.log2(n) + 2
            )


def test_embed_height_grows_by_log_factor():
    for seed in range(10):
        n = 16 + seed
        tree = bfs_spanning_tree(random_tree(n, seed), 0)
        emb = embed_into_binary_tree(tree)
        h = tree.height[tree.root]
        assert emb.binary.height[emb.binary.root] <= 2 * h + math.log2(n) + 2


# ---------------------------------------------------------------------------
# general trees
# ---------------------------------------------------------------------------

def test_tree_star_matches_hand_expansion():
    g = star_graph(5)
    s, tree = construct_graph_categories(g)
    assert s.categories == (
        (0, 1, 2),
        (0, 1, 2, 3, 4),
        (0, 1, 3),
        (0, 2, 4),
        (0, 3, 4),
        (1,),
        (2,),
        (3,),
        (4,),
    )
    assert s.memdim() == 5
    assert verified(g, s)
    # the projected system stays below the host-tree system here
    host = embed_into_binary_tree(tree).binary
    assert s.memdim() <= construct_binary_tree_categories(host).memdim()


def test_tree_height_two_all_leaf_pairs():
    # root, three middles, leaves below: the awkward case for witnesses
    children = [[1, 2, 3], [4, 5], [6, 7, 8], [9], [], [], [], [], [], []]
    t = RootedTree(0, children)
    g = t.as_graph()
    s = construct_tree_categories(t)
    assert verified(g, s)
    report = verify_all_pairs(g, s)
    assert report.works  # covers every leaf-to-leaf pair


def test_tree_construction_on_path_works_but_is_not_tight():
    g = path_graph(9)
    tree = bfs_spanning_tree(g, choose_bfs_root(g))
    s = construct_tree_categories(tree)
    assert verified(g, s)
    assert s.memdim() >= diameter(g)  # never below, usually well above


def test_tree_random_instances():
    for seed in range(25):
        n = 2 + 3 * seed
        g = random_tree(n, seed)
        s, _ = construct_graph_categories(g)
        assert verified(g, s)
        assert s.memdim() >= diameter(g)


# ---------------------------------------------------------------------------
# general graphs
# ---------------------------------------------------------------------------

def test_graph_cycle_four():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
    s, _ = construct_graph_categories(g)
    assert verified(g, s)
    assert s.memdim() >= 2 == diameter(g)


def test_graph_complete_four():
    g = complete_graph(4)
    s, _ = construct_graph_categories(g)
    assert verified(g, s)
    assert s.memdim() >= 1


def test_graph_small_world_instance():
    g = make_graph("ws", 64, 42)
    s, _ = construct_graph_categories(g)
    assert verify_all_pairs(g, s).works


def test_graph_spanning_tree_is_bfs_at_midpoint():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
    _, tree = construct_graph_categories(g)
    assert tree.root == choose_bfs_root(g)
    assert tree.depth == bfs_spanning_tree(g, tree.root).depth


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        construct_graph_categories(Graph(0, []))
    from catroute import DisconnectedGraphError

    with pytest.raises(DisconnectedGraphError):
        construct_graph_categories(Graph.from_edges([(0, 1)], n=3))


def test_construct_auto_dispatch():
    s, tree, method = construct_auto(path_graph(5))
    assert method == "path" and tree is None
    assert s.memdim() == 4

    s, tree, method = construct_auto(star_graph(5))
    assert method == "tree" and tree is not None

    s, tree, method = construct_auto(complete_graph(4))
    assert method == "graph"


def test_construct_auto_single_vertex():
    s, _, _ = construct_auto(Graph.from_edges([], n=1))
    assert s.categories == ((0,),)
