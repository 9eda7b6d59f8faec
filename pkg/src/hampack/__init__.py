"""hampack: exact desk-scale computations around even factors, robust
expansion and edge-disjoint Hamilton cycle packing."""

from .core import (
    DiGraph,
    EdgeSubgraph,
    Graph,
    Partition,
    edges_between,
    edges_inside,
    ordered_pairs,
    remove_subgraph,
    union_edge_disjoint,
)
from .construct import (
    babai_graph,
    circulant_regular,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    extremal_graph,
    random_graph,
    reference_graph,
    two_cliques,
)
from .edgelist import (
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .expanders import (
    ExpanderVerdict,
    RobustParams,
    eulerian_orientation,
    is_robust_expander_exact,
    is_robust_outexpander_exact,
    min_degree_implies_expander_params,
    refute_robust_expander_mc,
    robust_neighborhood,
    robust_out_neighborhood,
    sparse_expander_factor,
)
from .extremality import (
    AlmostRegularReport,
    ClosenessReport,
    ExtremalityReport,
    TrichotomyResult,
    almost_regular_audit,
    check_eta_extremal_pair,
    closeness,
    find_eta_extremal_witness,
    greedy_sparsify,
    trichotomy_classify,
)
from .factors import (
    Factor,
    FactorDecision,
    Matching,
    RegEvenBounds,
    TutteCertificate,
    dense_factor_degree,
    extract_r_factor,
    largest_even_factor,
    max_matching,
    petersen_two_factorization,
    r_factor_exists,
    reg_even_of_graph,
    regeven_bounds,
    tutte_quantities,
    tutte_verify_exhaustive,
)
from .hamilton import (
    ConjectureReport,
    Packing,
    conjecture_experiment,
    decompose_even_regular,
    find_hamilton,
    max_packing_exact,
    pack_hamilton,
    verify_packing,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostRegularReport",
    "ClosenessReport",
    "ConjectureReport",
    "DiGraph",
    "EdgeSubgraph",
    "ExpanderVerdict",
    "ExtremalityReport",
    "Factor",
    "FactorDecision",
    "Graph",
    "Matching",
    "Packing",
    "Partition",
    "RegEvenBounds",
    "RobustParams",
    "TrichotomyResult",
    "TutteCertificate",
    "__version__",
    "almost_regular_audit",
    "babai_graph",
    "check_eta_extremal_pair",
    "circulant_regular",
    "closeness",
    "complete_bipartite",
    "complete_graph",
    "conjecture_experiment",
    "cycle_graph",
    "decompose_even_regular",
    "dense_factor_degree",
    "edges_between",
    "edges_inside",
    "eulerian_orientation",
    "extract_r_factor",
    "extremal_graph",
    "find_eta_extremal_witness",
    "find_hamilton",
    "format_edge_list",
    "greedy_sparsify",
    "is_robust_expander_exact",
    "is_robust_outexpander_exact",
    "largest_even_factor",
    "max_matching",
    "max_packing_exact",
    "min_degree_implies_expander_params",
    "ordered_pairs",
    "pack_hamilton",
    "parse_edge_list",
    "petersen_two_factorization",
    "r_factor_exists",
    "random_graph",
    "read_edge_list",
    "reference_graph",
    "refute_robust_expander_mc",
    "reg_even_of_graph",
    "regeven_bounds",
    "remove_subgraph",
    "robust_neighborhood",
    "robust_out_neighborhood",
    "sparse_expander_factor",
    "trichotomy_classify",
    "tutte_quantities",
    "tutte_verify_exhaustive",
    "two_cliques",
    "union_edge_disjoint",
    "verify_packing",
    "write_edge_list",
]
