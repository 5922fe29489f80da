"""Signed graphic matroids and principalized tropical Prym varieties of double covers."""

__version__ = "0.1.0"

from .cover import (
    CoverError,
    DoubleCover,
    TrivialCoverError,
    build_total_graph,
    contract_cover,
    edge_free_reduction,
    free_resolution,
    homology_maps,
    normalize_signs,
    reorient,
    restrict,
    switch,
    validate,
)
from .cycles import fundamental_cycle, kernel_lattice, tau
from .graph import HalfEdgeGraph
from .matroid import SignedMatroidView, simplify
from .prym import (
    compare_pryms,
    gram_matrix,
    jacobian_volume,
    matroid_package,
    polarization_type,
    prym_data,
    prym_from_matroid,
    prym_volume_det,
    prym_volume_ogod,
    verify_simplification_invariance,
)

__all__ = [
    "CoverError",
    "DoubleCover",
    "HalfEdgeGraph",
    "SignedMatroidView",
    "TrivialCoverError",
    "build_total_graph",
    "compare_pryms",
    "contract_cover",
    "edge_free_reduction",
    "free_resolution",
    "fundamental_cycle",
    "gram_matrix",
    "homology_maps",
    "jacobian_volume",
    "kernel_lattice",
    "matroid_package",
    "normalize_signs",
    "polarization_type",
    "prym_data",
    "prym_from_matroid",
    "prym_volume_det",
    "prym_volume_ogod",
    "reorient",
    "restrict",
    "simplify",
    "switch",
    "tau",
    "validate",
    "verify_simplification_invariance",
]
