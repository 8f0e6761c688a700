"""The two structural properties behind guaranteed delivery.

Internally connected: every category induces a connected subgraph.
Shattered: for every ordered pair (s, t) some neighbor of s shares a
category with t that excludes s.

Facts demonstrated below:
  * a system that is not shattered always has a stuck pair;
  * on trees, internally connected + shattered guarantee delivery;
  * on general graphs the two properties are NOT enough — the library's
    search digs up a concrete counterexample.
"""

from catroute import (
    CategorySystem,
    find_ic_shattered_failure,
    is_internally_connected,
    is_shattered,
    random_tree,
    construct_graph_categories,
    verify_all_pairs,
)

# not shattered => routing fails (smallest possible instance)
from catroute import path_graph

g = path_graph(2)
s = CategorySystem(2, [[0, 1]])
print("edge graph with one shared category:")
print(f"  shattered: {is_shattered(g, s).ok}, works: {verify_all_pairs(g, s).works}")

# trees: internally connected + shattered => works, always
tree = random_tree(20, seed=3)
system, _ = construct_graph_categories(tree)
print("\nrandom 20-vertex tree with its constructed system:")
print(f"  internally connected: {is_internally_connected(tree, system).ok}")
print(f"  shattered:            {is_shattered(tree, system).ok}")
print(f"  works:                {verify_all_pairs(tree, system).works}")

# general graphs: both properties can hold while routing still dies
print("\nsearching for a counterexample on general graphs...")
found = find_ic_shattered_failure(max_n=8, trials=10**5, seed=7)
g, s = found
report = verify_all_pairs(g, s)
print(f"  found n={g.n}: edges {list(g.edges())}")
print(f"  categories {[list(c) for c in s.categories]}")
print(f"  internally connected: {is_internally_connected(g, s).ok}")
print(f"  shattered:            {is_shattered(g, s).ok}")
print(f"  works:                {report.works}  (stuck pair {report.first_failure})")
