"""How the tree construction keeps the membership dimension small.

A star shows the problem: the obvious per-leaf categories put the hub in
linearly many sets. The fix is a weight-balanced binary expansion of every
high-degree vertex — children become leaves of a small shape whose internal
positions are "dummy" grouping nodes — followed by the binary-tree category
construction and a projection back to real vertices.
"""

import math

from catroute import (
    RootedTree,
    build_weight_balanced,
    construct_graph_categories,
    construct_tree_categories,
    diameter,
    embed_into_binary_tree,
    leaf_depths,
    star_graph,
    verify_all_pairs,
)

# weight-balanced shapes place heavy items near the top
for weights in ([1, 1, 1, 1], [8, 1, 1], [5, 1, 1, 1, 20]):
    shape = build_weight_balanced(weights)
    depths = leaf_depths(shape)
    total = sum(weights)
    print(f"weights {weights}: leaf depths {[depths[i] for i in range(len(weights))]}")
    for i, w in enumerate(weights):
        assert depths[i] <= math.floor(math.log2(total / w)) + 2

# a big star: hub with 30 leaves
g = star_graph(31)
system, tree = construct_graph_categories(g)
emb = embed_into_binary_tree(tree)
print(f"\nstar with 30 leaves: diameter {diameter(g)}")
print(f"  host tree adds {emb.dummy_count} dummies, height {emb.binary.height[emb.binary.root]}")
print(f"  membership dimension: {system.memdim()} "
      f"(naive per-leaf scheme would give 30 at the hub)")
print(f"  works: {verify_all_pairs(g, system).works}")

# a lopsided tree: one hub child is itself a deep subtree
children = [[1, 2, 3, 4, 5], [6], [7], [], [], [], [8], [], []]
t = RootedTree(0, children)
system = construct_tree_categories(t)
print(f"\nlopsided 9-vertex tree: memdim {system.memdim()}, "
      f"works {verify_all_pairs(t.as_graph(), system).works}")
