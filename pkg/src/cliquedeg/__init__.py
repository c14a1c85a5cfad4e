"""Degree sums over cliques: greedy construction, exact extremal scans, and
balanced multipartite (Turan) graph arithmetic for small graphs."""

from .cliques import DegreeSumResult, degree_sum, enumerate_r_cliques, max_clique_degree_sum
from .graph6 import (
    Graph6ParseError,
    from_edge_list_text,
    from_graph6,
    load_graph_text,
    to_edge_list_text,
    to_graph6,
)
from .graphs import (
    VERTEX_CAP,
    Graph,
    ResourceLimitError,
    VertexSet,
    add_edge,
    bonferroni_lower_bound,
    common_neighborhood,
    from_edges,
    new_graph,
)
from .greedy import (
    DEFAULT_BRANCH_CAP,
    FloorCheckReport,
    GreedySequence,
    MeanCheckReport,
    PreconditionError,
    all_greedy_sequences,
    check_floor_bound,
    check_mean_bound,
    greedy_sequence,
)
from .extremal import (
    ScanRecord,
    StabilityParams,
    StabilityReport,
    VerifyReport,
    band_violation,
    canonical_form,
    enumerate_graphs,
    extremal_degree_sum_local_search,
    extremal_degree_sum_min,
    near_regular_graph,
    scan_m,
    stability_experiment,
    verify_all,
)
from .turan import TuranDecomposition, complete_multipartite, turan_decomposition, turan_graph, turan_size

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BRANCH_CAP",
    "DegreeSumResult",
    "FloorCheckReport",
    "Graph",
    "Graph6ParseError",
    "GreedySequence",
    "MeanCheckReport",
    "PreconditionError",
    "ResourceLimitError",
    "ScanRecord",
    "StabilityParams",
    "StabilityReport",
    "TuranDecomposition",
    "VERTEX_CAP",
    "VerifyReport",
    "VertexSet",
    "add_edge",
    "all_greedy_sequences",
    "band_violation",
    "bonferroni_lower_bound",
    "canonical_form",
    "check_floor_bound",
    "check_mean_bound",
    "common_neighborhood",
    "complete_multipartite",
    "degree_sum",
    "enumerate_graphs",
    "enumerate_r_cliques",
    "extremal_degree_sum_local_search",
    "extremal_degree_sum_min",
    "from_edge_list_text",
    "from_edges",
    "from_graph6",
    "greedy_sequence",
    "load_graph_text",
    "max_clique_degree_sum",
    "near_regular_graph",
    "new_graph",
    "scan_m",
    "stability_experiment",
    "to_edge_list_text",
    "to_graph6",
    "turan_decomposition",
    "turan_graph",
    "turan_size",
    "verify_all",
]
