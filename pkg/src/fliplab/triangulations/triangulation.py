"""
Full and partial triangulations and their bistellar flips.

A triangulation lives on a vertex subset of its PointSet that contains every hull
point. Inner points outside the vertex set are "skipped". Flips never mutate: each
returns a new Triangulation.

Flip elements are either an Edge (edge flip) or an int point index (removal of a
degree-3 inner vertex, or insertion of a skipped point).
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Union

from loguru import logger

from ..errors import NotFlippable
from ..geometry import PointSet, in_triangle, orient
from .graph import Edge, PlaneGraph, Violation, edge_set, locked_endpoints

FlipElement = Union[Edge, int]

FULL = "full"
PARTIAL = "partial"


def element_sort_key(x: FlipElement):
    return (0, tuple(x)) if isinstance(x, Edge) else (1, (x,))


def element_label(x: FlipElement) -> str:
    return f"e{x}" if isinstance(x, Edge) else f"p{x}"


def parse_element(label: str) -> FlipElement:
    if label.startswith("e"):
        u, v = label[1:].split("-")
        return Edge.of(int(u), int(v))
    if label.startswith("p"):
        return int(label[1:])
    raise ValueError(f"not a flip element label: {label!r}")


@dataclass(frozen=True)
class Triangulation(PlaneGraph):
    @property
    def kind(self) -> str:
        return FULL if self.vertices == self.base.indices else PARTIAL

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(w for w in self.bounded_faces if len(w) == 3)

    def apexes(self, e: Edge) -> tuple[int, int]:
        """Apex of the triangle left of u->v, and of the one right of it."""
        u, v = e
        return self.prev_ccw(v, u), self.prev_ccw(u, v)

    def territory(self, e: Edge) -> tuple[int, int, int, int]:
        """The quadrilateral u, b, v, a (CCW) of the two triangles at inner edge e."""
        a, b = self.apexes(e)
        return (e.u, b, e.v, a)

    # -- flippability ---------------------------------------------------------

    def is_flippable_edge(self, e: Edge) -> bool:
        if e not in self.inner_edges:
            return False
        a, b = self.apexes(e)
        pts = self.base.points
        return orient(pts[a], pts[b], pts[e.u]) * orient(pts[a], pts[b], pts[e.v]) < 0

    @cached_property
    def flippable_edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.inner_edges if self.is_flippable_edge(e))

    @cached_property
    def removable_points(self) -> frozenset[int]:
        return frozenset(v for v in self.inner_vertices if self.degree(v) == 3)

    @cached_property
    def flippable_elements(self) -> tuple[FlipElement, ...]:
        elements = list(self.flippable_edges) + list(self.removable_points)
        elements += list(self.skipped)
        return tuple(sorted(elements, key=element_sort_key))

    def is_flippable(self, x: FlipElement) -> bool:
        if isinstance(x, Edge):
            return x in self.flippable_edges
        return x in self.removable_points or x in self.skipped

    # -- flips ----------------------------------------------------------------

    def edge_flip(self, e: Edge) -> "Triangulation":
        if not self.is_flippable_edge(e):
            logger.error(f"edge {e} is not flippable")
            raise NotFlippable(e)
        a, b = self.apexes(e)
        edges = (self.edges - {e}) | {Edge.of(a, b)}
        return Triangulation(self.base, self.vertices, edges)

    def locate(self, p: int) -> tuple[int, int, int]:
        """The triangle strictly containing point p (exhaustive scan)."""
        pts = self.base.points
        hits = [t for t in self.triangles if in_triangle(pts[p], *(pts[i] for i in t))]
        if len(hits) != 1:
            raise NotFlippable(p)
        return hits[0]

    def apply_flip(self, x: FlipElement) -> "Triangulation":
        if isinstance(x, Edge):
            return self.edge_flip(x)
        if x in self.removable_points:
            spokes = {Edge.of(x, w) for w in self.rotation[x]}
            return Triangulation(self.base, self.vertices - {x}, self.edges - spokes)
        if x in self.skipped:
            corners = self.locate(x)
            spokes = {Edge.of(x, w) for w in corners}
            return Triangulation(self.base, self.vertices | {x}, self.edges | spokes)
        logger.error(f"element {x!r} is not flippable")
        raise NotFlippable(x)

    def inverse_element(self, x: FlipElement) -> FlipElement:
        """The element whose flip undoes T[x]."""
        if isinstance(x, Edge):
            a, b = self.apexes(x)
            return Edge.of(a, b)
        return x

    # -- encodings ------------------------------------------------------------

    @cached_property
    def key(self) -> bytes:
        return canonical_key(self)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": sorted(self.vertices),
                "edges": [list(e) for e in sorted(self.edges)],
            }
        )

    @classmethod
    def from_json(cls, ps: PointSet, text: str) -> "Triangulation":
        payload = json.loads(text)
        return cls(ps, frozenset(payload["vertices"]), edge_set(payload["edges"]))

    # -- validation -----------------------------------------------------------

    def validate(self) -> list[Violation]:
        out = self.structural_violations()
        if out:
            return out
        pts = self.base.points
        nv, h = len(self.vertices), self.base.h
        for w in self.bounded_faces:
            if len(w) != 3:
                out.append(Violation("region-not-triangle", f"face {w}"))
        if len(self.edges) != 3 * nv - 3 - h:
            out.append(
                Violation(
                    "edge-count", f"{len(self.edges)} edges, expected {3 * nv - 3 - h}"
                )
            )
        if len(self.bounded_faces) != 2 * nv - 2 - h:
            out.append(
                Violation(
                    "region-count",
                    f"{len(self.bounded_faces)} regions, expected {2 * nv - 2 - h}",
                )
            )
        for v in sorted(self.isolated):
            out.append(Violation("isolated-vertex", f"vertex {v} has no edges"))
        for v in sorted(self.vertices):
            for t in self.triangles:
                if v not in t and in_triangle(pts[v], *(pts[i] for i in t)):
                    out.append(Violation("vertex-in-region", f"{v} inside {t}"))
        return out

    def is_valid(self) -> bool:
        return not self.validate()


def canonical_key(t: PlaneGraph) -> bytes:
    """Vertex bitmask followed by the sorted edge list, both big-endian."""
    mask = 0
    for v in t.vertices:
        mask |= 1 << v
    head = mask.to_bytes(max(1, (t.base.n + 7) // 8), "big")
    body = b"".join(struct.pack(">HH", *e) for e in sorted(t.edges))
    return head + body


def key_from_hex(text: str) -> bytes:
    return bytes.fromhex(text)


def decode_key(ps: PointSet, key: bytes) -> tuple[frozenset[int], frozenset[Edge]]:
    """Inverse of canonical_key: the vertex set and edge set it encodes."""
    width = max(1, (ps.n + 7) // 8)
    mask = int.from_bytes(key[:width], "big")
    body = key[width:]
    if len(body) % 4:
        raise ValueError("key body is not a whole number of edges")
    vertices = frozenset(v for v in range(ps.n) if mask >> v & 1)
    edges = edge_set(
        struct.unpack(">HH", body[i : i + 4]) for i in range(0, len(body), 4)
    )
    return vertices, edges


def triangulation_from_key(ps: PointSet, key: bytes) -> Triangulation:
    vertices, edges = decode_key(ps, key)
    return Triangulation(ps, vertices, edges)


def seed_full_triangulation(
    ps: PointSet, vertices: Optional[Iterable[int]] = None
) -> Triangulation:
    """Fan from the first hull point, then insert the other vertices in index order."""
    chosen = ps.indices if vertices is None else frozenset(vertices)
    if not set(ps.hull) <= chosen:
        raise ValueError("vertices must contain every hull point")
    hull = ps.hull
    edges = set(edge_set(ps.hull_edges))
    for i in range(2, len(hull) - 1):
        edges.add(Edge.of(hull[0], hull[i]))
    t = Triangulation(ps, frozenset(hull), frozenset(edges))
    for p in sorted(chosen - set(hull)):
        t = t.apply_flip(p)
    logger.debug(f"Seed triangulation on {len(chosen)} vertices: {len(t.edges)} edges")
    return t


def flippable_edges(t: Triangulation) -> frozenset[Edge]:
    return t.flippable_edges


def flippable_elements(t: Triangulation) -> tuple[FlipElement, ...]:
    return t.flippable_elements


def edge_flip(t: Triangulation, e: Edge) -> Triangulation:
    return t.edge_flip(e)


def apply_bistellar_flip(t: Triangulation, x: FlipElement) -> Triangulation:
    return t.apply_flip(x)


def validate(t: Triangulation) -> list[Violation]:
    return t.validate()


__all__ = [
    "FULL",
    "PARTIAL",
    "FlipElement",
    "Triangulation",
    "apply_bistellar_flip",
    "canonical_key",
    "edge_flip",
    "element_label",
    "element_sort_key",
    "flippable_edges",
    "flippable_elements",
    "decode_key",
    "key_from_hex",
    "locked_endpoints",
    "parse_element",
    "seed_full_triangulation",
    "triangulation_from_key",
    "validate",
]
