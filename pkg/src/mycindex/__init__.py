"""Exact topological indices of Mycielskian graphs and their complements,
with verifiers for the closed-form degree and distance laws and a
brute-force audit of the published Gutman-index formulas.
"""

from .closed_forms import (
    AuditRecord,
    CaseBreakdown,
    GraphParameters,
    PairClass,
    audit,
    classify_pair,
    direct_class_sums,
    lemma_degree_product,
    lemma_degree_sum,
    thm5_cases_printed,
    thm5_printed,
    thm6_cases_printed,
    thm6_printed,
)
from .formats import FormatError, parse_edge_list, parse_graph6, stream_graphs, write_graph6
from .graph_core import (
    Graph,
    VertexRole,
    build_graph,
    complement,
    degree,
    degree_sequence,
    generate,
    is_connected,
    mycielskian,
    role_from_index,
    role_to_index,
)
from .metrics import (
    DisconnectedGraphError,
    DistanceMatrix,
    IndexReport,
    degree_distance,
    distance_matrix,
    gutman,
    index_report,
    wiener,
    zagreb1,
    zagreb2,
)
from .structure_laws import (
    LawReport,
    mu_bar_degree,
    mu_bar_distance,
    mu_degree,
    mu_distance,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "AuditRecord",
    "CaseBreakdown",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "FormatError",
    "Graph",
    "GraphParameters",
    "IndexReport",
    "LawReport",
    "PairClass",
    "VertexRole",
    "audit",
    "build_graph",
    "classify_pair",
    "complement",
    "degree",
    "degree_distance",
    "degree_sequence",
    "direct_class_sums",
    "distance_matrix",
    "generate",
    "gutman",
    "index_report",
    "is_connected",
    "lemma_degree_product",
    "lemma_degree_sum",
    "mu_bar_degree",
    "mu_bar_distance",
    "mu_degree",
    "mu_distance",
    "mycielskian",
    "parse_edge_list",
    "parse_graph6",
    "role_from_index",
    "role_to_index",
    "stream_graphs",
    "thm5_cases_printed",
    "thm5_printed",
    "thm6_cases_printed",
    "thm6_printed",
    "verify_structure",
    "wiener",
    "write_graph6",
    "zagreb1",
    "zagreb2",
]
