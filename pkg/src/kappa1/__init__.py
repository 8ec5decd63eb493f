"""Vertex connectivity and super-connectivity with checkable certificates,
plus closed-form checks for Kneser graphs KG(n, 3)."""

from .certificates import CutCertificate, SuperCutCertificate, SuperCutReport, validate_super_cut
from .connectivity import (
    EdgePairBound,
    Status,
    Strategy,
    SuperConnectivityResult,
    VertexConnectivity,
    augment_cut_to_super,
    constructive_super_cut,
    edge_pair_lower_bound,
    is_super_connected,
    super_connectivity,
    vertex_connectivity,
)
from .flow import MinCutAnswer, disjoint_paths, min_vertex_cut
from .graph import (
    Graph,
    binomial,
    components,
    export_dot,
    kneser_graph,
    parse_graph,
    rank_subset,
    serialize_graph,
    unrank_subset,
)
from .kneser import (
    claim_bound,
    claim_sweep,
    classify_triple,
    conjecture_value,
    meeting_count,
    residual_identity,
    verify_theorem,
)
from .oracle import OracleBudget, brute_force_super_connectivity, brute_force_vertex_connectivity

__version__ = "0.1.0"

__all__ = [
    "CutCertificate",
    "EdgePairBound",
    "Graph",
    "MinCutAnswer",
    "OracleBudget",
    "Status",
    "Strategy",
    "SuperConnectivityResult",
    "SuperCutCertificate",
    "SuperCutReport",
    "VertexConnectivity",
    "augment_cut_to_super",
    "binomial",
    "brute_force_super_connectivity",
    "brute_force_vertex_connectivity",
    "claim_bound",
    "claim_sweep",
    "classify_triple",
    "components",
    "conjecture_value",
    "constructive_super_cut",
    "disjoint_paths",
    "edge_pair_lower_bound",
    "export_dot",
    "is_super_connected",
    "kneser_graph",
    "meeting_count",
    "min_vertex_cut",
    "parse_graph",
    "rank_subset",
    "residual_identity",
    "serialize_graph",
    "super_connectivity",
    "unrank_subset",
    "validate_super_cut",
    "verify_theorem",
]
