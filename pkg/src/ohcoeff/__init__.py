"""Determinants and permanents of oriented hypergraph adjacency and Laplacian
matrices, along with their characteristic polynomials.  Each is computed from
contributor enumeration and checked against exact integer linear algebra."""

from .analysis import (
    balanced_perm_A_check,
    bounds_report,
    is_bouquet_family,
    orientation_sweep,
    sachs_coefficients,
)
from .coefficients import (
    charpoly_det_A,
    charpoly_det_L,
    charpoly_perm_A,
    charpoly_perm_L,
    det_A,
    det_L,
    perm_A,
    perm_L,
)
from .contributors import (
    Contributor,
    ContributorStats,
    enumerate_contributors,
    enumerate_hat_eq,
    enumerate_hat_geq,
    group_by_permutomorphism,
    stats,
)
from .hypergraph import OrientedHypergraph, build, from_graph, from_signed_graph
from .limits import Limits
from .matrices import IntMatrix, IntPolynomial

__version__ = "0.1.0"
