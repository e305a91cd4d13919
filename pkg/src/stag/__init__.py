"""Spanning tree auxiliary graph toolkit.

Build Aux(G) of a connected simple graph, factor it over the Cartesian
product, decide whether an arbitrary graph is such an auxiliary graph,
reconstruct a minimal preimage, and audit the structural parameter
bounds. Brute-force oracles double-check everything at small scale."""

from .aux_graph import (
    CliqueClass,
    NeighborhoodPartitions,
    StagGraph,
    build_stag,
    ground_truth_cliques,
    neighborhood_partitions,
    stag_to_dot,
    stag_to_json,
)
from .errors import (
    Acyclic,
    Disconnected,
    EdgeInTree,
    HasBridge,
    NoWitness,
    NotAStag,
    NotMinimal,
    NotTwoConnected,
    ParseError,
    StagError,
    TooLarge,
    TooManyTrees,
    Unannotated,
    ValidationFailed,
)
from .factorization import (
    Factorization,
    is_prime,
    prime_factorize,
    product_of_block_stags,
)
from .generators import (
    random_connected_graph,
    random_multiblock_graph,
    random_two_connected_graph,
)
from .graph_core import (
    BlockDecomposition,
    Edge,
    EdgeCut,
    Graph,
    are_isomorphic,
    block_decomposition,
    bridges,
    cartesian_product,
    circumference,
    common_cycle_classes,
    complete_graph,
    cycle_graph,
    is_connected,
    is_two_connected,
    minimal_edge_cuts,
    parse_graph,
    path_graph,
    single_vertex_graph,
    to_dot,
    to_edgelist,
    to_json,
)
from .params import ParamReport, exchange_diameter, maximal_cliques, param_report
from .recognition import (
    ExplicitTree,
    InferredParams,
    LabeledTreeEdge,
    add_chords,
    enumerate_preimages,
    extend_to_maximal_clique,
    infer_params,
    invert,
    invert_prime,
    label_cut_cliques,
    layout_tree,
    recover_neighborhood_partitions,
)
from .spanning_trees import (
    SpanningTree,
    count_spanning_trees,
    dfs_spanning_tree,
    enumerate_spanning_trees,
    fundamental_cycle,
    reverse_delete_tree,
    serialize_trees,
    type1_neighbors,
    type2_neighbors,
    witness_edge_for_pair,
)

__version__ = "0.1.0"
