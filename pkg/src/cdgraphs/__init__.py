"""Bakry-Émery curvature-dimension conditions on weighted graphs.

Covers the Γ-calculus on graphs, CD(K, n) decisions at vertices (a generic
PSD route and a closed form for girth at least five), curvature values,
graph families and isomorph-free enumeration of small graphs.
"""

from .calculus import (
    LocalForms,
    gamma2_at,
    gamma2_bochner_at,
    gamma_at,
    hessian_norm_sq,
    laplacian_at,
    local_forms,
)
from .curvature import (
    CD_ZERO_INF,
    CurvatureParams,
    CurvatureReport,
    alpha,
    cd_at,
    cd_at_generic,
    cd_at_girth5,
    cd_graph,
    curvature_map,
    curvature_report,
    curvature_value_at,
    lemma33_pattern,
    lemma42_pattern,
    pending_cd,
    q_count,
)
from .enumeration import (
    ClassificationOutcome,
    EnumerationConfig,
    enumerate_graphs,
    resolve_star_question,
    verify_classification,
)
from .errors import *  # noqa: F401,F403
from .families import (
    FamilyDescriptor,
    FamilyKind,
    is_family_member,
    make_cycle,
    make_path,
    make_petersen,
    make_spider,
    make_star,
    make_star3_ext,
)
from .graph import (
    INF,
    LaplacianMode,
    VertexNeighborhood,
    WeightedGraph,
    build_graph,
    combinatorial_degree,
    distance,
    girth,
    girth_at,
    hat_b2,
    is_tree,
    sphere,
    weighted_degree,
)
from .graphio import parse_graph, read_graph, serialize_graph

__version__ = "0.1.0"
