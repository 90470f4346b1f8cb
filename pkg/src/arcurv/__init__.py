"""Exact Lin-Lu-Yau curvature, matching witnesses, and spectral checks for amply regular graphs."""

from .curvature import (
    CurvatureError,
    CurvatureTable,
    ProbMeasure,
    Rational,
    TransportPlan,
    assignment_wasserstein,
    curvature_all_edges,
    lly_curvature,
    mu_p,
    ollivier_kappa_p,
    plan_cost,
    wasserstein,
)
from .generators import (
    gen_cocktail,
    gen_complete,
    gen_cycle,
    gen_hamming,
    gen_hypercube,
    gen_paley,
    gen_shrikhande,
)
from .graph import (
    AmplyParams,
    AmplyViolation,
    EdgeNeighborhoodPartition,
    Graph,
    GraphError,
    detect_amply_params,
    dump_edge_list,
    edge_partition,
    load_edge_list,
)
from .matching import (
    Bipartite,
    Matching,
    MatchingError,
    dense_perfect_matching,
    hall_violator,
    konig_decomposition,
    matching_through_edge,
    max_matching,
)
from .report import VerificationReport, verify_graph
from .search import search_amply
from .spectral import (
    SpectralError,
    Spectrum,
    adjacency_spectrum,
    jacobi_eigenvalues,
    lambda1,
    second_largest,
)
from .witness import (
    ReachableChain,
    TransportBipartite,
    WitnessError,
    build_pi0,
    build_transport_bipartite,
    check_h_regular,
    prop_3_1_certificate,
    reachable_map,
    verify_lemma_3_3,
    witness_curvature_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
