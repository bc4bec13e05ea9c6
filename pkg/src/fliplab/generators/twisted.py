"""
Twisted double-gons.

2k points: hull points p_0..p_{k-1} (indices 0..k-1) CCW on a large circle, and inner
points q_0..q_{k-1} (indices k..2k-1) on a smaller, slightly rotated circle. The
construction searches a small grid of rotations and radii and keeps the first
configuration whose conditions all hold under exact predicates:

I    the hull is exactly p_0..p_{k-1};
II   the inner points are in convex position;
III  q_i is extreme in P without p_i;
IV   q_i is extreme in P without p_{i-1} and q_{i-1};
V    q_i lies in the triangle q_{i-1} p_i q_{i+1}.

When rounding breaks every grid point, the search repeats at larger radii.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from loguru import logger

from ..errors import (
    CollinearTriple,
    ConstructionFailed,
    DuplicatePoint,
    InvalidSubdivision,
)
from ..geometry import PointSet, assert_general_position, convex_hull, in_triangle
from ..subdivisions import Subdivision
from ..triangulations import edge_set

RADIUS = 10**5
ROTATIONS = [5, -5, 10, -10, 15, -15, 20, -20, 25, -25, 30, -30, 35, -35, 40, -40]
RATIOS = [r / 100 for r in range(20, 95, 5)]
RADIUS_RETRIES = 2
RADIUS_GROWTH = 10


def _is_extreme(ps: PointSet, point: int, without: Iterable[int]) -> bool:
    dropped = set(without)
    keep = [i for i in range(ps.n) if i not in dropped]
    hull = convex_hull([ps.points[i] for i in keep])
    return keep.index(point) in hull


def twisted_conditions(ps: PointSet, k: int) -> dict[str, bool]:
    """Conditions I to V for the layout [p_0..p_{k-1}, q_0..q_{k-1}]."""
    p = list(range(k))
    q = [k + i for i in range(k)]
    pts = ps.points
    inner_hull = convex_hull([pts[i] for i in q])
    return {
        "I": sorted(ps.hull) == p,
        "II": len(inner_hull) == k,
        "III": all(_is_extreme(ps, q[i], [p[i]]) for i in range(k)),
        "IV": all(_is_extreme(ps, q[i], [p[i - 1], q[i - 1]]) for i in range(k)),
        "V": all(
            in_triangle(pts[q[i]], pts[q[i - 1]], pts[p[i]], pts[q[(i + 1) % k]])
            for i in range(k)
        ),
    }


def _candidate(k: int, rotation_deg: int, ratio: float, radius: int) -> list[tuple]:
    phi = math.radians(rotation_deg)
    outer, inner = [], []
    for i in range(k):
        theta = 2 * math.pi * i / k
        outer.append((round(radius * math.cos(theta)), round(radius * math.sin(theta))))
        inner.append(
            (
                round(ratio * radius * math.cos(theta - phi)),
                round(ratio * radius * math.sin(theta - phi)),
            )
        )
    return outer + inner


def _search(k: int, radius: int) -> Optional[PointSet]:
    for rotation in ROTATIONS:
        for ratio in RATIOS:
            try:
                ps = assert_general_position(_candidate(k, rotation, ratio, radius))
            except (CollinearTriple, DuplicatePoint):
                continue
            if ps.h != k:
                continue
            conditions = twisted_conditions(ps, k)
            if all(conditions.values()):
                logger.debug(
                    f"twisted double-gon k={k}: rotation {rotation} deg, ratio {ratio}"
                )
                return ps
    return None


def twisted_double_gon(k: int, radius: int = RADIUS) -> PointSet:
    """Search the grid at radius, then at up to RADIUS_RETRIES larger radii."""
    if k < 3:
        raise ValueError("a twisted double-gon needs k >= 3")
    for attempt in range(RADIUS_RETRIES + 1):
        scaled = radius * RADIUS_GROWTH**attempt
        ps = _search(k, scaled)
        if ps is not None:
            return ps
        logger.warning(f"no twisted double-gon for k={k} at radius {scaled}")
    logger.error(f"twisted double-gon k={k} still degenerate at radius {scaled}")
    raise ConstructionFailed(f"twisted double-gon with k={k}")


def twisted_subdivision(ps: PointSet) -> Subdivision:
    """The subdivision joining each q_i to p_i and to q_{i+1}; its slack is n - 3."""
    k = ps.n // 2
    pairs = list(ps.hull_edges)
    pairs += [(k + i, i) for i in range(k)]
    pairs += [(k + i, k + (i + 1) % k) for i in range(k)]
    s = Subdivision(ps, ps.indices, edge_set(pairs))
    violations = s.validate()
    if violations:
        raise InvalidSubdivision(violations)
    if s.slack != ps.n - 3:
        raise ConstructionFailed(f"twisted subdivision has slack {s.slack}")
    return s


__all__ = ["twisted_conditions", "twisted_double_gon", "twisted_subdivision"]
