"""Steiner distance hypermatrices of graphs: exact hyperdeterminants,
closed-form and iterative spectra, and sweep harnesses over trees.
"""

from .exact import IntMatrix, Poly, char_poly_exact, circulant, circulant_det_oracle, det_exact
from .graphs import (
    Graph,
    all_connected_graphs,
    canonical_key,
    complete_graph,
    distance_matrix,
    enumerate_labeled_trees,
    graph_canonical_form,
    parse_graph,
    path_graph,
    read_graph,
    relabel_graph,
    star_graph,
    steiner_distance,
    tree_canonical_form,
    tree_from_prufer,
    write_graph,
)
from .harness import (
    ResultCache,
    SweepRecord,
    SweepReport,
    extremal_radius,
    falsifying_witness,
    graham_pollak_check,
    sweep_trees,
)
from .hypermatrix import SymmetricHypermatrix, build_steiner_hypermatrix
from .resultant import (
    DegenerateConstructionError,
    HomogeneousSystem,
    gradient_system,
    hyperdet,
    hyperdet_route,
    macaulay_matrix,
    macaulay_resultant,
)
from .spectra import (
    EigenPair,
    NoConvergence,
    RadiusEnclosure,
    block_matrix_check,
    block_matrix_K2,
    charpoly_allones,
    charpoly_D_dim2,
    constant_term,
    eigenvalues_K2,
    merge_eigenpairs,
    multiset_equal,
    nqz_spectral_radius,
    spectral_radius_K2,
    weak_compositions,
)
from .sylvester2 import hyperdet_dim2, sylvester_matrix
from .wendt import VanishingVerdict, lehmer_vanishes, theorem1_vanishes, wendt

__version__ = "0.1.0"

__all__ = [
    "IntMatrix",
    "Poly",
    "char_poly_exact",
    "circulant",
    "circulant_det_oracle",
    "det_exact",
    "Graph",
    "all_connected_graphs",
    "canonical_key",
    "complete_graph",
    "distance_matrix",
    "enumerate_labeled_trees",
    "graph_canonical_form",
    "parse_graph",
    "path_graph",
    "read_graph",
    "relabel_graph",
    "star_graph",
    "steiner_distance",
    "tree_canonical_form",
    "tree_from_prufer",
    "write_graph",
    "ResultCache",
    "SweepRecord",
    "SweepReport",
    "extremal_radius",
    "falsifying_witness",
    "graham_pollak_check",
    "sweep_trees",
    "SymmetricHypermatrix",
    "build_steiner_hypermatrix",
    "DegenerateConstructionError",
    "HomogeneousSystem",
    "gradient_system",
    "hyperdet",
    "hyperdet_route",
    "macaulay_matrix",
    "macaulay_resultant",
    "EigenPair",
    "NoConvergence",
    "RadiusEnclosure",
    "block_matrix_check",
    "block_matrix_K2",
    "charpoly_allones",
    "charpoly_D_dim2",
    "constant_term",
    "eigenvalues_K2",
    "merge_eigenpairs",
    "multiset_equal",
    "nqz_spectral_radius",
    "spectral_radius_K2",
    "weak_compositions",
    "hyperdet_dim2",
    "sylvester_matrix",
    "VanishingVerdict",
    "lehmer_vanishes",
    "theorem1_vanishes",
    "wendt",
]
