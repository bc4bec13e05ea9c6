"""
Plane straight-line graphs on a PointSet.

PlaneGraph is the common base of Triangulation and Subdivision. It owns the rotation
system (neighbours of each vertex in CCW order), face extraction by half-edge traversal
and the structural checks both subclasses share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from ..geometry import PointSet, det2, orient, segments_cross


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"degenerate edge at {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, p: int) -> int:
        return self.v if p == self.u else self.u

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


class Violation(NamedTuple):
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def edge_set(pairs: Iterable) -> frozenset[Edge]:
    return frozenset(Edge.of(a, b) for a, b in pairs)


@dataclass(frozen=True)
class PlaneGraph:
    base: PointSet = field(compare=False, repr=False)
    vertices: frozenset[int]
    edges: frozenset[Edge]

    # -- rotation system ------------------------------------------------------

    @cached_property
    def rotation(self) -> dict[int, tuple[int, ...]]:
        """Neighbours of every vertex in CCW order (by exact angle)."""
        nbrs = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        rank = self.base.radial_rank
        return {v: tuple(sorted(ns, key=rank[v].__getitem__)) for v, ns in nbrs.items()}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def next_ccw(self, v: int, u: int) -> int:
        ring = self.rotation[v]
        return ring[(ring.index(u) + 1) % len(ring)]

    def prev_ccw(self, v: int, u: int) -> int:
        ring = self.rotation[v]
        return ring[(ring.index(u) - 1) % len(ring)]

    # -- derived sets ---------------------------------------------------------

    @cached_property
    def hull_edges(self) -> frozenset[Edge]:
        return edge_set(self.base.hull_edges)

    @cached_property
    def inner_edges(self) -> frozenset[Edge]:
        return self.edges - self.hull_edges

    @cached_property
    def inner_vertices(self) -> frozenset[int]:
        return self.vertices & self.base.inner

    @cached_property
    def skipped(self) -> frozenset[int]:
        return self.base.inner - self.vertices

    @cached_property
    def isolated(self) -> frozenset[int]:
        return frozenset(v for v, ring in self.rotation.items() if not ring)

    # -- faces ----------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All face boundary walks; bounded faces come out CCW.

        The walk continues from half-edge u->v with v->w, w the CW successor of u
        around v, which keeps the face on the left.
        """
        seen = set()
        walks = []
        for u, v in sorted(self.edges):
            for start in ((u, v), (v, u)):
                if start in seen:
                    continue
                walk = []
                a, b = start
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self.prev_ccw(b, a)
                walks.append(tuple(walk))
        return tuple(walks)

    def face_area2(self, walk) -> int:
        pts = self.base.points
        origin = pts[walk[0]]
        return sum(
            det2(origin, pts[walk[i]], pts[walk[i + 1]])
            for i in range(1, len(walk) - 1)
        )

    @cached_property
    def bounded_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(w for w in self.faces if self.face_area2(w) > 0)

    # -- checks ---------------------------------------------------------------

    def structural_violations(self, crossings: bool = True) -> list[Violation]:
        """Checks shared by triangulations and subdivisions."""
        out = []
        pts = self.base.points
        for e in sorted(self.edges):
            if e.u not in self.vertices or e.v not in self.vertices:
                detail = f"edge {e} leaves the vertex set"
                out.append(Violation("dangling-edge", detail))
        missing_hull = set(self.base.hull) - self.vertices
        if missing_hull:
            out.append(Violation("missing-hull-point", f"{sorted(missing_hull)}"))
        for e in sorted(self.hull_edges - self.edges):
            out.append(Violation("missing-hull-edge", f"{e}"))
        if out:
            return out
        for e, f in combinations(sorted(self.edges), 2) if crossings else ():
            if segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v]):
                out.append(Violation("crossing", f"{e} crosses {f}"))
        if out:
            return out
        outer = [w for w in self.faces if self.face_area2(w) <= 0]
        if len(outer) != 1:
            out.append(
                Violation("face-structure", f"{len(outer)} unbounded boundary walks")
            )
        return out

    def radial_neighbours_around(self, p: int, q: int) -> tuple[int, int]:
        """Neighbours of p just CW and just CCW of q (q a neighbour of p)."""
        return self.prev_ccw(p, q), self.next_ccw(p, q)


def locked_endpoints(g: PlaneGraph, e: Edge) -> frozenset[int]:
    """Endpoints of e at which removing e leaves an angle of at least pi.

    Vertices of degree 1 or 2 always lock. Hull edges count as locked at both ends.
    """
    if e in g.hull_edges:
        return frozenset(e)
    locked = set()
    pts = g.base.points
    for p in e:
        q = e.other(p)
        if g.degree(p) <= 2:
            locked.add(p)
            continue
        left, right = g.radial_neighbours_around(p, q)
        if orient(pts[p], pts[left], pts[right]) < 0:
            locked.add(p)
    return frozenset(locked)


def is_locked(g: PlaneGraph, e: Edge) -> bool:
    return bool(locked_endpoints(g, e))

