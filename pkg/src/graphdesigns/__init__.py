"""Graphical designs: vertex subsets that integrate the leading eigenvectors
of the random-walk Laplacian exactly."""

__version__ = "0.1.0"

from .bounds import (BoundCertificate, GrowthProfile, HypothesisError, check_theorem,
                     growth_profile, theorem_lower_bound)
from .catalog import catalog_get, describe, names
from .design import EPS_INT, Design, DesignReport, design_strength, equal_weight_strengths, \
    quadrature_residuals, threshold
from .graph import (Graph, GraphError, distances_from, from_edge_list, from_graph6, from_lcf,
                    generalized_petersen, pairwise_distance_sum, parse_lcf, read_edge_list, to_graph6)
from .search import (BudgetExceeded, HeatState, SearchResult, brute_force, diffuse, heat_local_search,
                     heat_objective, heuristic_distance_search, multi_seed)
from .spectral import (EPS_DEG, EPS_EIG, AmbiguousClusteringWarning, FrequencyClass, Spectrum,
                       SpectrumError, build_operator, eigendecompose, frequency_classes, spectrum)
from .weighted import SingularMinorError, WeightedSolution, find_minor_design, solve_weights

__all__ = [
    "AmbiguousClusteringWarning", "BoundCertificate", "BudgetExceeded", "Design", "DesignReport",
    "EPS_DEG", "EPS_EIG", "EPS_INT", "FrequencyClass", "Graph", "GraphError", "GrowthProfile",
    "HeatState", "HypothesisError", "SearchResult", "SingularMinorError", "Spectrum", "SpectrumError",
    "WeightedSolution", "brute_force", "build_operator", "catalog_get", "check_theorem", "describe",
    "design_strength", "diffuse", "distances_from", "eigendecompose", "equal_weight_strengths",
    "find_minor_design", "frequency_classes", "from_edge_list", "from_graph6", "from_lcf",
    "generalized_petersen", "growth_profile", "heat_local_search", "heat_objective",
    "heuristic_distance_search", "multi_seed", "names", "pairwise_distance_sum", "parse_lcf",
    "quadrature_residuals", "read_edge_list", "solve_weights", "spectrum", "theorem_lower_bound",
    "threshold", "to_graph6",
]
