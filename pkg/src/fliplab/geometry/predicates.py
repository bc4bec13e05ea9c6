"""
Exact integer predicates.

Every geometric decision in fliplab goes through the sign of an integer determinant.
Coordinates are bounded by 2^30, so orientation determinants stay below 2^63 and the
lifted (height) determinants used by the regularity code stay exact as well.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import NamedTuple, Sequence

COORD_BOUND = 1 << 30
_DET_BOUND = 1 << 63


class Point(NamedTuple):
    x: int
    y: int


def det2(p: Point, q: Point, r: Point) -> int:
    """Twice the signed area of triangle pqr."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    assert -_DET_BOUND < det < _DET_BOUND, "orientation determinant out of range"
    return det


def orient(p: Point, q: Point, r: Point) -> int:
    """+1 if r is strictly left of the directed line pq, -1 if right, 0 if collinear."""
    det = det2(p, q, r)
    return (det > 0) - (det < 0)


def _on_closed_segment(a: Point, b: Point, c: Point) -> bool:
    # c is known to be collinear with ab
    in_x = min(a.x, b.x) <= c.x <= max(a.x, b.x)
    return in_x and min(a.y, b.y) <= c.y <= max(a.y, b.y)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff closed segments ab and cd meet anywhere but a shared endpoint."""
    if a in (c, d) or b in (c, d):
        return False
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_closed_segment(a, b, c):
        return True
    if o2 == 0 and _on_closed_segment(a, b, d):
        return True
    if o3 == 0 and _on_closed_segment(c, d, a):
        return True
    if o4 == 0 and _on_closed_segment(c, d, b):
        return True
    return False


def in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict containment of p in triangle abc (either orientation)."""
    s1, s2, s3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    return s1 == s2 == s3 != 0


def in_convex_polygon(p: Point, polygon: Sequence[Point]) -> bool:
    """Strict containment of p in a CCW convex polygon."""
    k = len(polygon)
    return all(orient(polygon[i], polygon[(i + 1) % k], p) > 0 for i in range(k))


def _half(d: tuple[int, int]) -> int:
    # 0 for directions in [0, pi), 1 for [pi, 2 pi)
    dx, dy = d
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def compare_directions(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    """Compare two nonzero direction vectors by their angle in [0, 2 pi)."""
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def radial_sort(center: Point, others: Sequence[tuple[int, Point]]) -> list[int]:
    """Sort (index, point) pairs CCW around center, from the positive x-direction."""
    key = cmp_to_key(
        lambda a, b: compare_directions(
            (a[1].x - center.x, a[1].y - center.y),
            (b[1].x - center.x, b[1].y - center.y),
        )
    )
    return [i for i, _ in sorted(others, key=key)]


def in_open_half_plane(vectors: Sequence[tuple[int, int]]) -> bool:
    """True iff some open half-plane through the origin contains all the vectors.

    Assumes pairwise non-parallel vectors. Then the set fits in an open half-plane iff
    one of its members has every other member strictly to its left.
    """
    if not vectors:
        return False
    for i, v in enumerate(vectors):
        if all(
            v[0] * w[1] - v[1] * w[0] > 0 for j, w in enumerate(vectors) if j != i
        ):
            return True
    return False
