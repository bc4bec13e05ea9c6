"""
Full and partial subdivisions.

A subdivision is a plane graph containing the hull edges whose bounded regions are all
strictly convex. Inner vertices without edges are bystanders and count toward the slack
of the region they sit in. Triangulations are exactly the subdivisions of slack 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from loguru import logger

from ..errors import ConvexityViolation, InvalidSubdivision
from ..geometry import PointSet, in_convex_polygon, orient
from ..triangulations import (
    FULL,
    PARTIAL,
    Edge,
    FlipElement,
    PlaneGraph,
    Triangulation,
    Violation,
    canonical_key,
    edge_set,
)


class Region(NamedTuple):
    boundary: tuple[int, ...]
    bystanders_inside: frozenset[int]

    @property
    def slack(self) -> int:
        return len(self.boundary) + len(self.bystanders_inside) - 3

    @property
    def active(self) -> bool:
        return self.slack > 0

    @property
    def points(self) -> frozenset[int]:
        return frozenset(self.boundary) | self.bystanders_inside


def _is_strictly_convex(ps: PointSet, walk) -> bool:
    k = len(walk)
    if len(set(walk)) != k:
        return False
    pts = ps.points
    return all(
        orient(pts[walk[i - 1]], pts[walk[i]], pts[walk[(i + 1) % k]]) > 0
        for i in range(k)
    )


@dataclass(frozen=True)
class Subdivision(PlaneGraph):
    @property
    def kind(self) -> str:
        if self.vertices == self.base.indices and not self.bystanders:
            return FULL
        return PARTIAL

    @cached_property
    def bystanders(self) -> frozenset[int]:
        return self.isolated & self.base.inner

    @cached_property
    def involved(self) -> frozenset[int]:
        return self.inner_vertices - self.bystanders

    @cached_property
    def regions(self) -> tuple[Region, ...]:
        return tuple(regions_of(self))

    @property
    def slack(self) -> int:
        return sum(r.slack for r in self.regions)

    @property
    def closed_form_slack(self) -> int:
        nv, h = len(self.vertices), self.base.h
        return 3 * nv - 3 - h - len(self.edges) - 2 * len(self.bystanders)

    @property
    def refined_slack(self) -> int:
        return sum(math.ceil(r.slack / 2) for r in self.regions)

    @property
    def active_regions(self) -> tuple[Region, ...]:
        return tuple(r for r in self.regions if r.active)

    @property
    def is_triangulation(self) -> bool:
        return not self.bystanders and all(len(r.boundary) == 3 for r in self.regions)

    def to_triangulation(self) -> Triangulation:
        return Triangulation(self.base, self.vertices, self.edges)

    @cached_property
    def key(self) -> bytes:
        return canonical_key(self)

    def validate(self, crossings: bool = True) -> list[Violation]:
        out = self.structural_violations(crossings)
        if out:
            return out
        for walk in self.bounded_faces:
            if not _is_strictly_convex(self.base, walk):
                out.append(Violation("nonconvex-region", f"face {walk}"))
        return out

    def is_valid(self) -> bool:
        return not self.validate()

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": sorted(self.vertices),
                "edges": [list(e) for e in sorted(self.edges)],
                "bystanders": sorted(self.bystanders),
            }
        )

    @classmethod
    def from_json(cls, ps: PointSet, text: str) -> "Subdivision":
        payload = json.loads(text)
        vertices = frozenset(payload["vertices"])
        vertices |= frozenset(payload.get("bystanders", []))
        return cls(ps, vertices, edge_set(payload["edges"]))

    @classmethod
    def of(cls, g: PlaneGraph) -> "Subdivision":
        return cls(g.base, g.vertices, g.edges)

    @classmethod
    def trivial(cls, ps: PointSet) -> "Subdivision":
        """S_triv: every point, hull edges only (slack n - 3)."""
        return cls(ps, ps.indices, edge_set(ps.hull_edges))


def regions_of(s: Subdivision) -> list[Region]:
    """Bounded faces with CCW boundaries and the bystanders inside each."""
    pts = s.base.points
    regions = []
    remaining = set(s.bystanders)
    for walk in s.bounded_faces:
        if not _is_strictly_convex(s.base, walk):
            logger.error(f"Region {walk} has a reflex or repeated boundary vertex")
            raise ConvexityViolation(walk)
        polygon = [pts[i] for i in walk]
        inside = frozenset(p for p in remaining if in_convex_polygon(pts[p], polygon))
        remaining -= inside
        regions.append(Region(walk, inside))
    if remaining:
        raise InvalidSubdivision(
            [Violation("bystander-outside", f"{sorted(remaining)}")]
        )
    return regions


def make_subdivision(
    ps: PointSet, vertices: Iterable[int], edges: Iterable[Edge], crossings: bool = True
) -> Optional[Subdivision]:
    """A Subdivision if (vertices, edges) is one, else None.

    Pass crossings=False when the edges are known to be non-crossing.
    """
    s = Subdivision(ps, frozenset(vertices), frozenset(edges))
    if s.validate(crossings):
        return None
    return s


def slack(s: Subdivision) -> int:
    return s.slack


def is_refinement(s1: PlaneGraph, s2: PlaneGraph) -> bool:
    """s1 refines s2: s2 has every vertex of s1 and a subset of its edges."""
    return s1.vertices <= s2.vertices and s2.edges <= s1.edges


def meet(s1: PlaneGraph, s2: PlaneGraph) -> Optional[Subdivision]:
    """(V1 & V2, E1 | E2) when some triangulation refines both, else None."""
    return make_subdivision(s1.base, s1.vertices & s2.vertices, s1.edges | s2.edges)


def join(s1: PlaneGraph, s2: PlaneGraph) -> Optional[Subdivision]:
    """(V1 | V2, E1 & E2) when that graph is a subdivision, else None."""
    return make_subdivision(s1.base, s1.vertices | s2.vertices, s1.edges & s2.edges)


def partial_flip(t: Triangulation, x: FlipElement) -> Subdivision:
    """The slack-1 subdivision whose only refinements are t and t[x]."""
    tx = t.apply_flip(x)
    return Subdivision(t.base, t.vertices | tx.vertices, t.edges & tx.edges)


__all__ = [
    "Region",
    "Subdivision",
    "is_refinement",
    "join",
    "make_subdivision",
    "meet",
    "partial_flip",
    "regions_of",
    "slack",
]
