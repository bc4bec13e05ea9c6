"""
Points in convex position on a large integer circle.
"""

import math

from loguru import logger

from ..errors import CollinearTriple, ConstructionFailed
from ..geometry import PointSet, assert_general_position

RADIUS = 10**6
MAX_NUDGES = 10


def _outward(x: int, y: int) -> tuple[int, int]:
    return x + (x > 0) - (x < 0), y + (y > 0) - (y < 0)


def convex_gon(n: int, radius: int = RADIUS) -> PointSet:
    if n < 3:
        raise ValueError("a convex polygon needs at least 3 points")
    points = [
        (
            round(radius * math.cos(2 * math.pi * i / n)),
            round(radius * math.sin(2 * math.pi * i / n)),
        )
        for i in range(n)
    ]
    for attempt in range(MAX_NUDGES + 1):
        try:
            ps = assert_general_position(points)
        except CollinearTriple as err:
            i = err.triple[-1]
            logger.warning(f"convex {n}-gon: collinear {err.triple}, nudging point {i}")
            points[i] = _outward(*points[i])
            continue
        if ps.h != n:
            raise ConstructionFailed(f"rounded {n}-gon has only {ps.h} extreme points")
        return ps
    raise ConstructionFailed(
        f"convex {n}-gon still degenerate after {MAX_NUDGES} nudges"
    )


__all__ = ["convex_gon"]
