"""Normalized-Laplacian spectra, symmetry classification and eigenvalue-bound certificates for regular graphs."""

__version__ = "0.1.0"

from .graph import Graph, from_edge_list, is_connected  # noqa: E402
from .generators import FamilySpec, generate  # noqa: E402
from .io import parse_graph6, write_graph6  # noqa: E402
from .spectral import (  # noqa: E402
    EigGroups,
    Spectrum,
    eigendecompose,
    group_multiplicities,
    mu_pair,
    normalized_laplacian,
    spectrum,
)
from .symmetry import (  # noqa: E402
    SymmetryReport,
    find_automorphism,
    is_arc_transitive,
    is_vertex_transitive,
    pull_back,
)

__all__ = [
    "EigGroups",
    "FamilySpec",
    "Graph",
    "Spectrum",
    "SymmetryReport",
    "eigendecompose",
    "find_automorphism",
    "from_edge_list",
    "generate",
    "group_multiplicities",
    "is_arc_transitive",
    "is_connected",
    "is_vertex_transitive",
    "mu_pair",
    "normalized_laplacian",
    "parse_graph6",
    "pull_back",
    "spectrum",
    "write_graph6",
]
