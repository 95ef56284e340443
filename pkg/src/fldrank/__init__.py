"""Rank influential nodes in complex networks.

Six per-node importance measures (degree, closeness, betweenness,
eigenvector, local dimension and fuzzy local dimension) over immutable
undirected graphs, a reproducible susceptible-infected spreading simulator
for ground-truth influence, and tie-aware Kendall tau to score rankings
against it.
"""

from .centrality import (
    Measure,
    PowerIterationError,
    RankingList,
    ScoreVector,
    SortDirection,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    label_sort_key,
    local_dimension,
    ols_slope,
    rank_nodes,
    shortest_path_counts,
)
from .evaluation import (
    PairedSequence,
    TauResult,
    compute_measure,
    kendall_tau,
    oriented_scores,
    tau_sweep,
    top_k_overlap,
)
from .fld import (
    FuzzyCountSeries,
    MembershipParams,
    fuzzy_count,
    fuzzy_count_series,
    fuzzy_local_dimension,
    membership,
)
from .graph import (
    UNREACHABLE,
    ComponentMap,
    DistanceField,
    EdgeListError,
    Graph,
    all_distance_fields,
    bfs_distances,
    connected_components,
    diameter,
    load_edge_list,
    parse_edge_list,
)
from .si import (
    SiConfig,
    SiTrajectory,
    TrajectoryEnsemble,
    derive_seed,
    lambda_from_beta,
    replicate_rng,
    si_step,
    simulate,
    spreading_ability,
    worker_count,
)

__version__ = "0.1.0"
