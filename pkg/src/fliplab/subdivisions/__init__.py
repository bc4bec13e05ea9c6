"""
Subdivisions of planar point sets: regions and slack, the refinement poset, coarseners
and the counting audits that go with them.
"""

from .subdivision import (
    Region,
    Subdivision,
    is_refinement,
    join,
    make_subdivision,
    meet,
    partial_flip,
    regions_of,
    slack,
)
from .coarseners import (
    COARSENER,
    EDGE,
    POINT,
    Coarsener,
    Coarsening,
    Move,
    coarsening_moves,
    direct_coarsenings,
    full_coarsening_moves,
    incident_edges,
    is_coarsener,
    locked_inner_edges,
    maximal_full_coarsening,
    partial_flip_pair,
    perfect_coarsening_moves,
    perfect_coarsenings,
    prime_coarseners,
    unlocked_inner_edges,
)
from .poset import (
    Poset,
    all_partial_triangulations,
    build_full_poset,
    build_poset,
    maximal_elements,
)
from .audit import (
    UnorientedAudit,
    full_coarsening_audit,
    full_coarsening_bound,
    locking_orientation,
    unoriented_edges_audit,
    well_oriented_violation,
)

__all__ = [
    "COARSENER",
    "EDGE",
    "POINT",
    "Coarsener",
    "Coarsening",
    "Move",
    "Poset",
    "Region",
    "Subdivision",
    "UnorientedAudit",
    "all_partial_triangulations",
    "build_full_poset",
    "build_poset",
    "coarsening_moves",
    "direct_coarsenings",
    "full_coarsening_audit",
    "full_coarsening_bound",
    "full_coarsening_moves",
    "incident_edges",
    "is_coarsener",
    "is_refinement",
    "join",
    "locked_inner_edges",
    "locking_orientation",
    "make_subdivision",
    "maximal_elements",
    "maximal_full_coarsening",
    "meet",
    "partial_flip",
    "partial_flip_pair",
    "perfect_coarsening_moves",
    "perfect_coarsenings",
    "prime_coarseners",
    "regions_of",
    "slack",
    "unlocked_inner_edges",
    "unoriented_edges_audit",
    "well_oriented_violation",
]
