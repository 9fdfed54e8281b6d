"""Degree-adjacency spectra of simple graphs and the invariants they bound.

The package computes the spectrum of the degree-adjacency matrix (entry
1/sqrt(deg(u) deg(v)) on each edge), the Randic index family, alternating
polynomials on the eigenvalue mesh, and exact distance invariants, and
verifies every spectral bound against brute-force ground truth.
"""

from .altpoly import (
    AlternatingPolynomial,
    Mesh,
    alternating_polynomial_lp,
    alternating_polynomial_oracle,
    mesh_from_spectrum,
    p1_closed_form,
    p_last_closed_form,
)
from .bounds import (
    BoundReport,
    conditional_wiener_bound,
    degree_diameter_bound,
    excess_bound,
    excess_bound_regular,
    verify_all,
)
from .exact import (
    ExactInvariants,
    all_pairs_distances,
    conditional_distance_sum,
    conditional_excess,
    conditional_wiener,
    degree_diameter,
    graph_excess,
)
from .graph import (
    DegreeProfile,
    EdgeListParseError,
    Graph,
    bipartition,
    build_family,
    connected_components,
    degree_profile,
    disjoint_union,
    is_connected,
    is_regular,
    parse_edge_list,
    random_connected_graphs,
)
from .randic import (
    InequalityCheck,
    RandicReport,
    generalized_randic,
    higher_order_randic,
    randic_bound_report,
    randic_index,
    second_zagreb,
    zeroth_order,
)
from .spectral import (
    Spectrum,
    char_poly_from_spectrum,
    degree_adjacency,
    det_identity_residual,
    eigenvalues,
    jacobi_eigensystem,
    path_char_poly,
    standard_adjacency,
    standard_eigenvalues,
    structural_coefficients,
    weight_regular,
)
from .suite import CheckResult, check_graph

__version__ = "0.1.0"

__all__ = [
    "AlternatingPolynomial",
    "BoundReport",
    "CheckResult",
    "DegreeProfile",
    "EdgeListParseError",
    "ExactInvariants",
    "Graph",
    "InequalityCheck",
    "Mesh",
    "RandicReport",
    "Spectrum",
    "all_pairs_distances",
    "alternating_polynomial_lp",
    "alternating_polynomial_oracle",
    "bipartition",
    "build_family",
    "char_poly_from_spectrum",
    "check_graph",
    "conditional_distance_sum",
    "conditional_excess",
    "conditional_wiener",
    "conditional_wiener_bound",
    "connected_components",
    "degree_adjacency",
    "degree_diameter",
    "degree_diameter_bound",
    "degree_profile",
    "det_identity_residual",
    "disjoint_union",
    "eigenvalues",
    "excess_bound",
    "excess_bound_regular",
    "generalized_randic",
    "graph_excess",
    "higher_order_randic",
    "is_connected",
    "is_regular",
    "jacobi_eigensystem",
    "mesh_from_spectrum",
    "p1_closed_form",
    "p_last_closed_form",
    "parse_edge_list",
    "path_char_poly",
    "random_connected_graphs",
    "randic_bound_report",
    "randic_index",
    "second_zagreb",
    "standard_adjacency",
    "standard_eigenvalues",
    "structural_coefficients",
    "verify_all",
    "weight_regular",
    "zeroth_order",
]
