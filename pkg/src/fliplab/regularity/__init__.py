"""
Height functions, fold labelings and exact regularity decisions for subdivisions and
triangulations.
"""

from .simplex import LinearProgram, LPResult
from .heights import (
    FLAT,
    MOUNTAIN,
    VALLEY,
    HeightFunction,
    above_plane_form,
    compliant_dim,
    fold_form,
    is_compliant,
    omega_labeling,
    paraboloid_heights,
    valid_labeling_check,
)
from .regular import (
    FarkasCertificate,
    RegularityResult,
    delaunay_triangulation,
    farkas_certificate,
    find_non_regular_triangulation,
    is_regular_subdivision,
    is_regular_triangulation,
    regularity_notions_agree,
    verify_lifting,
)
from .chains import (
    ALL_REGULAR_PREDICATES,
    ChainResult,
    all_regular_predicates,
    perfect_chain_to_trivial,
    perfect_coarsener_label_constancy,
    regularity_preservation_check,
)

__all__ = [
    "ALL_REGULAR_PREDICATES",
    "ChainResult",
    "FLAT",
    "FarkasCertificate",
    "HeightFunction",
    "LPResult",
    "LinearProgram",
    "MOUNTAIN",
    "RegularityResult",
    "VALLEY",
    "above_plane_form",
    "all_regular_predicates",
    "compliant_dim",
    "delaunay_triangulation",
    "farkas_certificate",
    "find_non_regular_triangulation",
    "fold_form",
    "is_compliant",
    "is_regular_subdivision",
    "is_regular_triangulation",
    "omega_labeling",
    "paraboloid_heights",
    "perfect_chain_to_trivial",
    "perfect_coarsener_label_constancy",
    "regularity_notions_agree",
    "regularity_preservation_check",
    "valid_labeling_check",
    "verify_lifting",
]
