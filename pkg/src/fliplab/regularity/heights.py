"""
Height functions on point sets and what they induce on a subdivision.

Everything reduces to one integer linear form: for a CCW frame (u, v, a) and a point b,
``above_plane_form`` gives coefficients c with c.w > 0 iff the lift of b lies strictly
above the plane through the lifts of u, v and a. Compliance is c.w == 0 for every region
point off its region frame; the fold at an inner edge is the sign of c.w with the frame
taken on one side and b the apex on the other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from flint import fmpz_mat
from loguru import logger

from ..errors import InvariantViolation, NotCompliant
from ..geometry import PointSet, det2, in_open_half_plane
from ..subdivisions import Subdivision
from ..triangulations import Edge, PlaneGraph

MOUNTAIN = "+"
VALLEY = "-"
FLAT = "0"

EdgeLabeling = Mapping[Edge, str]


@dataclass(frozen=True)
class HeightFunction:
    heights: Mapping[int, Fraction]

    def __getitem__(self, i: int) -> Fraction:
        return self.heights[i]

    def __contains__(self, i: int) -> bool:
        return i in self.heights

    def value(self, form: Mapping[int, int]) -> Fraction:
        return sum((c * self.heights[i] for i, c in form.items()), Fraction(0))

    def to_json(self) -> str:
        payload = {str(i): str(Fraction(w)) for i, w in sorted(self.heights.items())}
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "HeightFunction":
        return cls({int(i): Fraction(w) for i, w in json.loads(text).items()})

    @classmethod
    def linear(
        cls,
        ps: PointSet,
        a: int,
        b: int,
        c: int,
        indices: Optional[Iterable[int]] = None,
    ) -> "HeightFunction":
        """w(p) = a*x + b*y + c on the given indices (default: every point)."""
        chosen = ps.indices if indices is None else indices
        pts = ps.points
        return cls({i: Fraction(a * pts[i].x + b * pts[i].y + c) for i in chosen})


def paraboloid_heights(ps: PointSet) -> HeightFunction:
    lifted = {i: Fraction(p.x * p.x + p.y * p.y) for i, p in enumerate(ps.points)}
    return HeightFunction(lifted)


def above_plane_form(
    ps: PointSet, frame: tuple[int, int, int], b: int
) -> dict[int, int]:
    u, v, a = frame
    pts = ps.points
    area = det2(pts[u], pts[v], pts[a])
    sign = 1 if area > 0 else -1
    form = {
        b: area,
        u: -det2(pts[b], pts[v], pts[a]),
        v: -det2(pts[u], pts[b], pts[a]),
        a: -det2(pts[u], pts[v], pts[b]),
    }
    return {i: sign * c for i, c in form.items() if c}


def compliance_forms(s: Subdivision) -> list[tuple[tuple[int, ...], dict[int, int]]]:
    """One (region boundary, form) pair per region point off the region's frame."""
    out = []
    for region in s.regions:
        frame = region.boundary[:3]
        rest = list(region.boundary[3:]) + sorted(region.bystanders_inside)
        for p in rest:
            out.append((region.boundary, above_plane_form(s.base, frame, p)))
    return out


def fold_form(g: PlaneGraph, e: Edge) -> dict[int, int]:
    """Positive on w iff the fold at inner edge e is a strict valley."""
    u, v = e
    left, right = g.prev_ccw(v, u), g.prev_ccw(u, v)
    return above_plane_form(g.base, (u, v, left), right)


def _kernel(forms: list[dict[int, int]], order: list[int]) -> list[list[int]]:
    """Integer basis of the common kernel of forms, one vector per basis element."""
    if not forms:
        return [[int(i == j) for i in range(len(order))] for j in range(len(order))]
    column = {v: j for j, v in enumerate(order)}
    matrix = fmpz_mat(len(forms), len(order))
    for r, form in enumerate(forms):
        for i, c in form.items():
            matrix[r, column[i]] = c
    kernel, nullity = matrix.nullspace()
    return [[int(kernel[i, j]) for i in range(len(order))] for j in range(nullity)]


def compliant_dim(
    s: Subdivision, check: bool = True
) -> tuple[int, list[HeightFunction]]:
    """Dimension of the space of compliant height functions on V(S), plus a basis."""
    order = sorted(s.vertices)
    vectors = _kernel([form for _, form in compliance_forms(s)], order)
    dim = len(vectors)
    basis = [
        HeightFunction({v: Fraction(x) for v, x in zip(order, vec)}) for vec in vectors
    ]
    if check and (dim < len(order) - s.slack or dim < 3):
        logger.error(f"compliant space of dimension {dim} on {len(order)} vertices")
        raise InvariantViolation(
            f"dim {dim} below max(|V| - slack, 3) = {max(len(order) - s.slack, 3)}"
        )
    return dim, basis


def is_compliant(s: Subdivision, w: HeightFunction) -> bool:
    return all(w.value(form) == 0 for _, form in compliance_forms(s))


def assert_compliant(s: Subdivision, w: HeightFunction) -> None:
    for boundary, form in compliance_forms(s):
        if w.value(form) != 0:
            logger.error(f"height function is not linear on region {boundary}")
            raise NotCompliant(boundary)


def omega_labeling(s: Subdivision, w: HeightFunction) -> dict[Edge, str]:
    assert_compliant(s, w)
    labels = {}
    for e in sorted(s.inner_edges):
        fold = w.value(fold_form(s, e))
        labels[e] = VALLEY if fold > 0 else (MOUNTAIN if fold < 0 else FLAT)
    return labels


def valid_labeling_check(
    s: Subdivision, labeling: EdgeLabeling
) -> tuple[bool, Optional[int]]:
    """Valid iff no involved inner vertex is pointed; returns the first pointed one."""
    missing = s.inner_edges - set(labeling)
    if missing:
        raise ValueError(f"labeling misses inner edges {sorted(missing)}")
    pts = s.base.points
    for p in sorted(s.involved):
        vectors = []
        for q in s.rotation[p]:
            label = labeling[Edge.of(p, q)]
            if label == FLAT:
                continue
            d = (pts[q].x - pts[p].x, pts[q].y - pts[p].y)
            vectors.append(d if label == MOUNTAIN else (-d[0], -d[1]))
        if vectors and in_open_half_plane(vectors):
            return False, p
    return True, None


__all__ = [
    "EdgeLabeling",
    "FLAT",
    "HeightFunction",
    "MOUNTAIN",
    "VALLEY",
    "above_plane_form",
    "assert_compliant",
    "compliance_forms",
    "compliant_dim",
    "fold_form",
    "is_compliant",
    "omega_labeling",
    "paraboloid_heights",
    "valid_labeling_check",
]
