"""
Point sets in general position.

A PointSet is the immutable base every graph in fliplab refers to: the points, the
CCW hull (starting at the lexicographically smallest point) and the inner indices.
The radial order of all other points around each point is computed once and shared
by every graph built on the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from loguru import logger

from ..errors import CollinearTriple, CoordinateOutOfRange, DuplicatePoint
from .predicates import COORD_BOUND, Point, orient, radial_sort


def convex_hull(points: Sequence[Point]) -> tuple[int, ...]:
    """Extreme-point indices, CCW from the lexicographic minimum (monotone chain)."""
    if len(points) < 3:
        raise ValueError("convex hull needs at least 3 points")
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))

    def chain(indices):
        out = []
        for i in indices:
            while len(out) >= 2:
                turn = orient(points[out[-2]], points[out[-1]], points[i])
                if turn == 0:
                    raise CollinearTriple(out[-2], out[-1], i)
                if turn > 0:
                    break
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    hull: tuple[int, ...]
    inner: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def h(self) -> int:
        return len(self.hull)

    @cached_property
    def indices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @cached_property
    def hull_edges(self) -> frozenset[tuple[int, int]]:
        k = self.h
        return frozenset(
            tuple(sorted((self.hull[i], self.hull[(i + 1) % k]))) for i in range(k)
        )

    @cached_property
    def radial(self) -> tuple[tuple[int, ...], ...]:
        """For each point, every other point in CCW order around it."""
        return tuple(
            tuple(
                radial_sort(
                    self.points[v],
                    [(u, self.points[u]) for u in range(self.n) if u != v],
                )
            )
            for v in range(self.n)
        )

    @cached_property
    def radial_rank(self) -> tuple[dict[int, int], ...]:
        return tuple({u: r for r, u in enumerate(order)} for order in self.radial)

    def is_hull_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.hull_edges

    def subset(self, indices: Iterable[int]) -> tuple["PointSet", tuple[int, ...]]:
        """The PointSet of a subset plus the map from new to original indices."""
        chosen = tuple(sorted(indices))
        return assert_general_position([self.points[i] for i in chosen]), chosen


def assert_general_position(points: Sequence[Point]) -> PointSet:
    """Build a PointSet; rejects duplicates, collinear triples and huge coordinates."""
    pts = tuple(Point(int(p[0]), int(p[1])) for p in points)
    if len(pts) < 3:
        raise ValueError("a point set needs at least 3 points")
    seen = {}
    for i, p in enumerate(pts):
        if abs(p.x) > COORD_BOUND or abs(p.y) > COORD_BOUND:
            logger.error(f"point {i} = {p} is outside the coordinate bound")
            raise CoordinateOutOfRange(i)
        if p in seen:
            logger.error(f"duplicate point {p} at indices {seen[p]} and {i}")
            raise DuplicatePoint(seen[p], i)
        seen[p] = i
    for i, j, k in combinations(range(len(pts)), 3):
        if orient(pts[i], pts[j], pts[k]) == 0:
            logger.error(f"collinear triple {(i, j, k)}")
            raise CollinearTriple(i, j, k)
    hull = convex_hull(pts)
    return PointSet(pts, hull, frozenset(range(len(pts))) - frozenset(hull))


