"""Mutual-visibility sets in trees: characterization, counting, enumeration,
c_Q-visibility, absolute-clearness and the line-graph identity, each backed
by an exhaustive oracle for small instances."""

from .cq import (
    CqReport,
    find_absolute_clear_violation,
    is_absolute_cq_visible_set,
    is_cq_visible_set,
    is_disjoint_visible,
    maximal_absolute_cq_visible_sets,
    verify_absolute_clear,
)
from .errors import (
    EmptyQ,
    EmptySeed,
    InputError,
    MutualVisibilityError,
    NoBranchVertex,
    NoEdges,
    NotAGraph,
    NotATree,
    NotBlockGraph,
    Overlap,
    PreconditionError,
    PreconditionViolated,
    TooFewEdges,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
)
from .generators import (
    all_labeled_trees,
    path_tree,
    prufer_decode,
    random_tree,
    spider_tree,
    star_tree,
    tree_from_prufer,
)
from .graph import (
    SimpleGraph,
    articulation_points,
    blocks,
    brute_force_mu,
    graph_from_edge_list,
    is_block_graph,
    is_mv_set_general,
    is_pair_x_visible,
    line_graph,
    mu_block_graph,
    mu_line_graph_of_tree,
)
from .io import format_tree, parse_tree, read_tree
from .oracle import (
    MvFamily,
    oracle_is_mv_set,
    oracle_maximal_absolute_cq_sets,
    oracle_mv_family,
    tree_mv_table,
)
from .tree import (
    Leg,
    Path,
    SteinerSubtree,
    Tree,
    VertexSet,
    attachment_point,
    branch_partition,
    branch_vertices,
    components_after_removal,
    leaves,
    legs,
    path_between,
    steiner_subtree,
    tree_from_edge_list,
    vertex_set,
)
from .visibility import (
    MuResult,
    RMuResult,
    enumerate_maximum_mv_sets,
    is_mv_set_fast,
    is_pair_q_visible_via_attachment,
    mu_tree,
    mu_tree_via_branch_degrees,
    r_mu,
)

__version__ = "0.1.0"
