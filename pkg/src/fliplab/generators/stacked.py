"""
Stacked point sets: a triangle refined by repeatedly inserting a point into a triangle.
"""

from __future__ import annotations

from typing import Iterable, Optional

from loguru import logger

from ..errors import CollinearTriple, ConstructionFailed
from ..geometry import PointSet, assert_general_position, det2
from ..triangulations import Triangulation, edge_set

SIDE = 10**6
OFFSETS = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3)]


def stacked_triangulation(
    ps: PointSet, order: Optional[Iterable[int]] = None
) -> Triangulation:
    """Insert the inner points into the hull triangle in the given order."""
    if ps.h != 3:
        raise ValueError("stacked triangulations need a triangular hull")
    order = sorted(ps.inner) if order is None else list(order)
    t = Triangulation(ps, frozenset(ps.hull), edge_set(ps.hull_edges))
    for p in order:
        t = t.apply_flip(p)
    return t


def stacked_points(depth: int) -> PointSet:
    """A big triangle plus depth points, each near the centroid of the largest triangle.

    Inserting the inner points in index order gives a stacked triangulation.
    """
    ps = assert_general_position([(0, 0), (SIDE, 0), (0, SIDE)])
    points = list(ps.points)
    triangles = [(0, 1, 2)]
    for _ in range(depth):
        target = max(
            triangles, key=lambda tri: abs(det2(*(points[i] for i in tri)))
        )
        cx = sum(points[i].x for i in target) // 3
        cy = sum(points[i].y for i in target) // 3
        for dx, dy in OFFSETS:
            try:
                ps = assert_general_position(points + [(cx + dx, cy + dy)])
            except CollinearTriple:
                continue
            break
        else:
            raise ConstructionFailed(f"no general-position point inside {target}")
        points = list(ps.points)
        p = len(points) - 1
        a, b, c = target
        triangles.remove(target)
        triangles += [(a, b, p), (b, c, p), (c, a, p)]
    if ps.h != 3:
        raise ConstructionFailed(f"stacked set has {ps.h} extreme points")
    logger.debug(f"stacked set of {ps.n} points")
    return ps


__all__ = ["stacked_points", "stacked_triangulation"]
