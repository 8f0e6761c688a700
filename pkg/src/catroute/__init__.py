"""catroute: category systems over graphs that make greedy routing work.

The library models a network as an undirected graph plus a family of vertex
categories. A message holder forwards to any neighbor sharing strictly more
of the target's categories; the package builds category systems under which
that strategy provably delivers, verifies the structural properties involved,
and measures how small the per-vertex category load (membership dimension)
can be relative to the graph diameter.
"""

from .categories import (
    CategorySystem,
    ConnectivityCheck,
    ShatterCheck,
    is_internally_connected,
    is_shattered,
)
from .bench import BenchRecord, bench_instance, make_graph, reference_bound, run_bench, write_csv
from .construct import (
    Embedding,
    build_weight_balanced,
    construct_auto,
    construct_binary_tree_categories,
    construct_graph_categories,
    construct_path_categories,
    construct_tree_categories,
    embed_into_binary_tree,
    leaf_depths,
)
from .errors import (
    CategoryFormatError,
    CatrouteError,
    DisconnectedGraphError,
    GraphFormatError,
    IdMismatchError,
    SizeGuardError,
)
from .fileio import (
    format_categories,
    format_graph,
    load_categories,
    load_graph,
    parse_categories,
    parse_graph,
    save_categories,
    save_graph,
)
from .generators import (
    complete_binary_tree,
    complete_graph,
    erdos_renyi_connected,
    path_graph,
    random_tree,
    star_graph,
    watts_strogatz,
)
from .graph import (
    Graph,
    RootedTree,
    bfs_distances,
    bfs_spanning_tree,
    choose_bfs_root,
    diameter,
    double_sweep,
    is_connected,
    is_path,
)
from .oracle import brute_force_min_memdim, find_ic_shattered_failure
from .routing import (
    ADVERSARIAL,
    CLOSEST,
    RouteResult,
    VerificationReport,
    greedy_step,
    route,
    verify_all_pairs,
)

__version__ = "0.1.0"

__all__ = [
    "ADVERSARIAL",
    "BenchRecord",
    "CLOSEST",
    "CategoryFormatError",
    "CategorySystem",
    "CatrouteError",
    "ConnectivityCheck",
    "DisconnectedGraphError",
    "Embedding",
    "Graph",
    "GraphFormatError",
    "IdMismatchError",
    "RootedTree",
    "RouteResult",
    "ShatterCheck",
    "SizeGuardError",
    "VerificationReport",
    "bench_instance",
    "bfs_distances",
    "bfs_spanning_tree",
    "brute_force_min_memdim",
    "build_weight_balanced",
    "choose_bfs_root",
    "complete_binary_tree",
    "complete_graph",
    "construct_auto",
    "construct_binary_tree_categories",
    "construct_graph_categories",
    "construct_path_categories",
    "construct_tree_categories",
    "diameter",
    "double_sweep",
    "embed_into_binary_tree",
    "erdos_renyi_connected",
    "find_ic_shattered_failure",
    "format_categories",
    "format_graph",
    "greedy_step",
    "is_connected",
    "is_internally_connected",
    "is_path",
    "is_shattered",
    "leaf_depths",
    "load_categories",
    "load_graph",
    "make_graph",
    "parse_categories",
    "parse_graph",
    "path_graph",
    "random_tree",
    "reference_bound",
    "route",
    "run_bench",
    "save_categories",
    "save_graph",
    "star_graph",
    "verify_all_pairs",
    "watts_strogatz",
    "write_csv",
]
