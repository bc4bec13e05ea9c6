"""
Exact planar geometry: integer points, orientation predicates and point sets in
general position.
"""

from .predicates import (
    COORD_BOUND,
    Point,
    compare_directions,
    det2,
    in_convex_polygon,
    in_open_half_plane,
    in_triangle,
    orient,
    radial_sort,
    segments_cross,
)
from .pointset import PointSet, assert_general_position, convex_hull
from .io import format_points, parse_points, read_points, write_points

__all__ = [
    "COORD_BOUND",
    "Point",
    "PointSet",
    "assert_general_position",
    "compare_directions",
    "convex_hull",
    "det2",
    "format_points",
    "in_convex_polygon",
    "in_open_half_plane",
    "in_triangle",
    "orient",
    "parse_points",
    "radial_sort",
    "read_points",
    "segments_cross",
    "write_points",
]
