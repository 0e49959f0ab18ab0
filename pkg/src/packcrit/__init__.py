"""Exact packing-coloring workbench.

A packing coloring assigns positive integer colors so that any two vertices
sharing color i lie at distance greater than i.  The package computes the
minimum palette size exactly, profiles how the value reacts to edge and
vertex deletions, generates the graph families tied to deletion-critical
behavior, and verifies fast structural criticality tests against brute-force
ground truth over exhaustive small-graph corpora.
"""

from .graphs import (
    INFINITY,
    BlockDecomposition,
    DistanceMatrix,
    Graph,
    GraphError,
    MetricSummary,
    all_pairs_distances,
    block_decomposition,
    connected_components,
    delete_edge,
    delete_vertex,
    disjoint_union,
    exists_alpha_set_avoiding,
    independence_number,
    induced_subgraph,
    is_connected,
    is_leaf,
    is_simplicial,
    is_tree,
    metric_summary,
    support_vertices,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6, parse_graph6_lines
from .canon import are_isomorphic, canonical_key, refinement_colors
from .solver import (
    ChiRhoResult,
    PackingColoring,
    SolveTimeout,
    brute_force_chi_rho,
    decide_packing_k_colorable,
    is_valid_packing_coloring,
    packing_chromatic_number,
)
from .criticality import (
    CriticalityReport,
    EdgeBoundViolation,
    RepairError,
    criticality_report,
    detour_drop_criterion,
    edge_deletion_lower_bound,
    edge_drop_profile,
    is_edge_critical,
    is_vertex_critical,
    repair_coloring,
)
from .families import (
    LabeledGraph,
    enumerate_block_graphs_diam2,
    enumerate_block_graphs_diam3,
    enumerate_caterpillars,
    enumerate_trees,
    gen_basic,
    gen_decorated_c4,
    gen_decorated_c8,
    gen_leafy_unicyclic,
    gen_net,
    gen_realization,
    gen_sharpness_family,
    is_caterpillar,
    tree_canonical_code,
)
from .caterpillar import (
    caterpillar_chi_rho,
    caterpillar_from_profile,
    caterpillar_profile,
    decide_caterpillar_k_colorable,
)
from .characterizations import (
    BlockDiam3Classification,
    ShapeError,
    TheoremVerdict,
    VerificationSummary,
    check_block_diam2,
    check_block_diam3,
    check_diam2_characterization,
    check_tree_equivalence,
    classify_4critical_leafy_unicyclic,
    classify_block_diam3,
    classify_small_critical,
    is_leafy_unicyclic,
    theorem_check,
    theorem_ids,
    verify_theorem,
)
from .corpus import all_graphs, connected_graphs, corpus_names, load_corpus

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "BlockDecomposition",
    "BlockDiam3Classification",
    "ChiRhoResult",
    "CriticalityReport",
    "DistanceMatrix",
    "EdgeBoundViolation",
    "Graph",
    "Graph6Error",
    "GraphError",
    "LabeledGraph",
    "MetricSummary",
    "PackingColoring",
    "RepairError",
    "ShapeError",
    "SolveTimeout",
    "TheoremVerdict",
    "VerificationSummary",
    "all_graphs",
    "all_pairs_distances",
    "are_isomorphic",
    "block_decomposition",
    "brute_force_chi_rho",
    "canonical_key",
    "caterpillar_chi_rho",
    "caterpillar_from_profile",
    "caterpillar_profile",
    "check_block_diam2",
    "check_block_diam3",
    "check_diam2_characterization",
    "check_tree_equivalence",
    "classify_4critical_leafy_unicyclic",
    "classify_block_diam3",
    "classify_small_critical",
    "connected_components",
    "connected_graphs",
    "corpus_names",
    "criticality_report",
    "decide_caterpillar_k_colorable",
    "decide_packing_k_colorable",
    "delete_edge",
    "delete_vertex",
    "detour_drop_criterion",
    "disjoint_union",
    "edge_deletion_lower_bound",
    "edge_drop_profile",
    "emit_graph6",
    "enumerate_block_graphs_diam2",
    "enumerate_block_graphs_diam3",
    "enumerate_caterpillars",
    "enumerate_trees",
    "exists_alpha_set_avoiding",
    "gen_basic",
    "gen_decorated_c4",
    "gen_decorated_c8",
    "gen_leafy_unicyclic",
    "gen_net",
    "gen_realization",
    "gen_sharpness_family",
    "independence_number",
    "induced_subgraph",
    "is_caterpillar",
    "is_connected",
    "is_edge_critical",
    "is_leaf",
    "is_leafy_unicyclic",
    "is_simplicial",
    "is_tree",
    "is_valid_packing_coloring",
    "is_vertex_critical",
    "load_corpus",
    "metric_summary",
    "packing_chromatic_number",
    "parse_graph6",
    "parse_graph6_lines",
    "refinement_colors",
    "repair_coloring",
    "support_vertices",
    "theorem_check",
    "theorem_ids",
    "tree_canonical_code",
    "verify_theorem",
]
