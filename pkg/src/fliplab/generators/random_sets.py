"""
Seeded random point sets in general position.
"""

import random

from loguru import logger

from ..errors import CollinearTriple, DuplicatePoint, ExhaustedRetries
from ..geometry import PointSet, assert_general_position

MAX_RETRIES = 100


def random_points(n: int, seed: int = 0, box: int = 1000) -> PointSet:
    """n integer points in [0, box]^2, rejection-sampled until in general position."""
    if n < 3:
        raise ValueError("need at least 3 points")
    if box < n:
        raise ValueError(f"box {box} is smaller than n={n}")
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        points = [(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
        try:
            return assert_general_position(points)
        except (CollinearTriple, DuplicatePoint) as err:
            logger.warning(f"random set n={n} seed={seed} try {attempt}: {err}")
    logger.error(f"no general-position sample of {n} points in box {box}")
    raise ExhaustedRetries(f"{MAX_RETRIES} samples of {n} points in [0, {box}]^2")


def random_superset(ps: PointSet, extra: int = 1, seed: int = 0) -> PointSet:
    """ps followed by extra seeded points from its bounding box, in general position."""
    xs = [x for x, _ in ps.points]
    ys = [y for _, y in ps.points]
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        added = [
            (rng.randint(min(xs), max(xs)), rng.randint(min(ys), max(ys)))
            for _ in range(extra)
        ]
        try:
            return assert_general_position(list(ps.points) + added)
        except (CollinearTriple, DuplicatePoint) as err:
            logger.debug(f"superset of {ps.n} points, try {attempt}: {err}")
    logger.error(f"no general-position superset of {ps.n} points with {extra} more")
    raise ExhaustedRetries(f"{MAX_RETRIES} supersets of {ps.n} points")


__all__ = ["random_points", "random_superset"]
