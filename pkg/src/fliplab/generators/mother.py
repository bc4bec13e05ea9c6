"""
The six-point mother-of-examples configuration.

An outer triangle p_0 p_1 p_2 with a rotated inner triangle q_0 q_1 q_2, stored as
[p_0, p_1, p_2, q_0, q_1, q_2]. The lines p_i q_i either meet in one point or not; which
of S, T' and T'' is regular depends only on that.
"""

from __future__ import annotations

from itertools import combinations

from ..geometry import PointSet, assert_general_position, orient
from ..subdivisions import Subdivision
from ..triangulations import Triangulation, edge_set
from .twisted import twisted_subdivision

CONCURRENT = ((0, 0), (60, 0), (0, 60), (15, 15), (30, 15), (15, 30))
NON_CONCURRENT = ((0, 0), (60, 0), (0, 60), (16, 15), (30, 15), (15, 30))


def mother_example(concurrent: bool = True) -> PointSet:
    return assert_general_position(CONCURRENT if concurrent else NON_CONCURRENT)


def _line(a, b) -> tuple[int, int, int]:
    # homogeneous coordinates of the line through a and b
    return (a[1] - b[1], b[0] - a[0], a[0] * b[1] - a[1] * b[0])


def concurrency_determinant(ps: PointSet) -> int:
    """Zero iff the lines p_i q_i (i = 0, 1, 2) pass through a common point."""
    pts = ps.points
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = (
        _line(pts[i], pts[i + 3]) for i in range(3)
    )
    return (
        a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    )


def order_type(ps: PointSet) -> tuple[int, ...]:
    pts = ps.points
    return tuple(
        orient(pts[i], pts[j], pts[k]) for i, j, k in combinations(range(ps.n), 3)
    )


def mother_triangulations(
    ps: PointSet,
) -> tuple[Subdivision, Triangulation, Triangulation]:
    """S, and its two refinements T' (diagonals p_i q_{i+1}) and T'' (q_i p_{i+1})."""
    s = twisted_subdivision(ps)
    t1 = edge_set((i, 3 + (i + 1) % 3) for i in range(3))
    t2 = edge_set((3 + i, (i + 1) % 3) for i in range(3))
    return (
        s,
        Triangulation(ps, s.vertices, s.edges | t1),
        Triangulation(ps, s.vertices, s.edges | t2),
    )


__all__ = [
    "CONCURRENT",
    "NON_CONCURRENT",
    "concurrency_determinant",
    "mother_example",
    "mother_triangulations",
    "order_type",
]
