"""
Full and partial triangulations as plane graphs: flips, flippability, locking and
canonical encodings.
"""

from .graph import Edge, PlaneGraph, Violation, edge_set, is_locked, locked_endpoints
from .triangulation import (
    FULL,
    PARTIAL,
    FlipElement,
    Triangulation,
    apply_bistellar_flip,
    canonical_key,
    decode_key,
    edge_flip,
    element_label,
    element_sort_key,
    flippable_edges,
    flippable_elements,
    key_from_hex,
    parse_element,
    seed_full_triangulation,
    triangulation_from_key,
    validate,
)
from .enumeration import (
    bistellar_flip_rule,
    edge_flip_rule,
    flip_closure,
    iter_closure,
)

__all__ = [
    "Edge",
    "FULL",
    "FlipElement",
    "PARTIAL",
    "PlaneGraph",
    "Triangulation",
    "Violation",
    "apply_bistellar_flip",
    "bistellar_flip_rule",
    "canonical_key",
    "decode_key",
    "edge_flip",
    "edge_flip_rule",
    "edge_set",
    "element_label",
    "element_sort_key",
    "flip_closure",
    "flippable_edges",
    "flippable_elements",
    "is_locked",
    "iter_closure",
    "key_from_hex",
    "locked_endpoints",
    "parse_element",
    "seed_full_triangulation",
    "triangulation_from_key",
    "validate",
]
