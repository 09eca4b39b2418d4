"""Laplacian spectra of token graphs, with cyclic lifts for F_2(C_n)."""

from .combinatorics import colex_subsets, subset_rank, subset_unrank
from .cycles import (
    alpha_estimates,
    asymptotic_eigs,
    bstar,
    closed_form_quotient_eigs,
    even_4r2_base,
    exactly_one_cycle_eigenvalue,
    f2_cycle_alpha,
    f2_cycle_decomposition,
    f2_cycle_spectrum,
    gershgorin_bound_check,
    odd_cycle_base,
    overlift_matrix,
    reconstruct_eigenvector,
    spectral_radius_gap,
    trace_identity_check,
)
from .errors import (
    CapExceeded,
    InvalidFamilyError,
    LiftNotSimple,
    MultisetMismatch,
    NonRegularPartition,
    NotSymmetrizable,
    NumericalFailure,
    OverliftInconsistency,
)
from .graph import Graph, bipartite_classes, build_family, delete_vertex, laplacian
from .linalg import (
    Spectrum,
    TriDiag,
    eig_herm,
    eig_sym,
    eig_tridiag_sym,
    gershgorin_left,
    rayleigh_quotient,
    spectrum_contains,
    spectrum_equal,
    spectrum_subtract,
    spectrum_union,
    symmetrize_tridiag,
)
from .partitions import Partition, QuotientMatrix, f2_cycle_partition, is_regular, quotient_laplacian
from .token import (
    algebraic_connectivity,
    binomial_matrix,
    kirkland_kappa,
    token_graph,
    verify_connectivity_relations,
)
from .voltage import LaurentMatrix, VoltageGraph, laplacian_base_matrix, lift_graph, lift_spectrum

__version__ = "0.1.0"

__all__ = [
    "algebraic_connectivity",
    "alpha_estimates",
    "asymptotic_eigs",
    "binomial_matrix",
    "bipartite_classes",
    "bstar",
    "build_family",
    "CapExceeded",
    "closed_form_quotient_eigs",
    "colex_subsets",
    "delete_vertex",
    "eig_herm",
    "eig_sym",
    "eig_tridiag_sym",
    "even_4r2_base",
    "exactly_one_cycle_eigenvalue",
    "f2_cycle_alpha",
    "f2_cycle_decomposition",
    "f2_cycle_partition",
    "f2_cycle_spectrum",
    "gershgorin_bound_check",
    "gershgorin_left",
    "Graph",
    "InvalidFamilyError",
    "is_regular",
    "kirkland_kappa",
    "laplacian",
    "laplacian_base_matrix",
    "LaurentMatrix",
    "lift_graph",
    "lift_spectrum",
    "LiftNotSimple",
    "MultisetMismatch",
    "NonRegularPartition",
    "NotSymmetrizable",
    "NumericalFailure",
    "odd_cycle_base",
    "overlift_matrix",
    "OverliftInconsistency",
    "Partition",
    "quotient_laplacian",
    "QuotientMatrix",
    "rayleigh_quotient",
    "reconstruct_eigenvector",
    "Spectrum",
    "spectrum_contains",
    "spectrum_equal",
    "spectrum_subtract",
    "spectral_radius_gap",
    "spectrum_union",
    "subset_rank",
    "subset_unrank",
    "symmetrize_tridiag",
    "token_graph",
    "trace_identity_check",
    "TriDiag",
    "verify_connectivity_relations",
    "VoltageGraph",
]
