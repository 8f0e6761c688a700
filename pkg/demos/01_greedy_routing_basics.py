"""Greedy category-based routing, from the ground up.

A message sits at some vertex and wants to reach a target. The only thing a
vertex knows is which categories it and its neighbors belong to, and which
categories the target belongs to. The categorical distance from u to t counts
the target's categories that u lacks; the greedy rule forwards to any
neighbor strictly closer by that measure.

This script builds a tiny system by hand, traces routes, and shows how the
same graph with a poorly chosen system gets stuck.
"""

from catroute import CategorySystem, path_graph, route, verify_all_pairs

g = path_graph(5)
print(f"graph: path on {g.n} vertices, edges {list(g.edges())}")

# prefix/suffix interval categories: the tight construction for paths
sets = []
for i in range(1, 5):
    sets.append(list(range(0, i)))        # everything before position i
for i in range(0, 4):
    sets.append(list(range(i + 1, 5)))    # everything after position i
system = CategorySystem(5, sets)
print(f"categories: {[list(c) for c in system.categories]}")
print(f"membership dimension: {system.memdim()}  (= diameter {g.n - 1})")

print("\nroute 0 -> 4:")
result = route(g, system, 0, 4)
for k, (v, d) in enumerate(zip(result.path, result.distances)):
    print(f"  hop {k}: vertex {v}, distance {d}")
print(f"  delivered: {result.delivered}")

report = verify_all_pairs(g, system)
print(f"\nall {report.pairs_checked} ordered pairs deliver: {report.works}")
print(f"longest route: {report.max_route_len}, mean: {report.mean_route_len:.3f}")

# now sabotage the system: one big category makes everyone indistinguishable
bad = CategorySystem(5, [[0, 1, 2, 3, 4]])
stuck = route(g, bad, 0, 4)
print(f"\nwith a single all-vertex category, 0 -> 4 is {stuck.stuck_reason!r}")
print(f"verify_all_pairs works: {verify_all_pairs(g, bad).works}, "
      f"first failing pair: {verify_all_pairs(g, bad).first_failure}")
