"""
Flip graphs of triangulations: enumeration, vertex connectivity, links and
compatibility, simultaneous flips, refinement subgraphs and brute-force oracles.
"""

from .flipgraph import (
    BISTELLAR,
    EDGE_FLIP,
    FlipGraph,
    build_bistellar_flip_graph,
    build_edge_flip_graph,
    has_c4,
    is_triangle_free,
    min_degree,
)
from .connectivity import (
    distance_two_pairs,
    local_menger_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
)
from .links import (
    COMPATIBLE_PARTIAL,
    INCOMPATIBLE,
    INDEPENDENT,
    WEAKLY_INDEPENDENT,
    Compatibility,
    Link,
    compatibility_classify,
    complement_has_c4,
    lift_link_edge,
    link_of,
    refinement_cycle,
)
from .simultaneous import (
    flippable_plus_simultaneous_bound,
    independence_graph,
    max_simultaneously_flippable,
    simultaneous_lower_bound,
)
from .refinement import product_graph, refinement_subgraph, region_flip_graphs
from .oracles import (
    definitional_hull,
    full_triangulation_keys,
    maximal_noncrossing_sets,
    partial_triangulation_keys,
    subdivision_covers,
    subdivision_keys,
)

__all__ = [
    "BISTELLAR",
    "COMPATIBLE_PARTIAL",
    "Compatibility",
    "EDGE_FLIP",
    "FlipGraph",
    "INCOMPATIBLE",
    "INDEPENDENT",
    "Link",
    "WEAKLY_INDEPENDENT",
    "build_bistellar_flip_graph",
    "build_edge_flip_graph",
    "compatibility_classify",
    "complement_has_c4",
    "definitional_hull",
    "distance_two_pairs",
    "flippable_plus_simultaneous_bound",
    "full_triangulation_keys",
    "has_c4",
    "independence_graph",
    "is_triangle_free",
    "lift_link_edge",
    "link_of",
    "local_menger_connectivity",
    "local_vertex_connectivity",
    "max_simultaneously_flippable",
    "maximal_noncrossing_sets",
    "min_degree",
    "partial_triangulation_keys",
    "product_graph",
    "refinement_cycle",
    "refinement_subgraph",
    "region_flip_graphs",
    "simultaneous_lower_bound",
    "subdivision_covers",
    "subdivision_keys",
    "vertex_connectivity",
]
