"""
Links of triangulations and compatibility of flippable elements.

Two flips x, y of T are compatible when the triangulations T, T[x], T[y] lie on a common
induced 4- or 5-cycle of the flip graph. The link of T is the graph on its flippable
elements whose edges are the compatible pairs, weighted 2 or 3 by the cycle length
minus two.

For the full link (edge flips only) the relation is decided by the territories of the
two edges. For the partial link it is decided by coarsening pFlip(T, x) perfectly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

import networkx as nx
from loguru import logger

from ..errors import InvariantViolation
from ..geometry import PointSet, in_triangle
from ..subdivisions import Subdivision, is_refinement, partial_flip_pair
from ..triangulations import (
    FULL,
    PARTIAL,
    Edge,
    FlipElement,
    Triangulation,
)
from .flipgraph import FlipGraph, has_c4

INDEPENDENT = "independent"
WEAKLY_INDEPENDENT = "weakly-independent"
COMPATIBLE_PARTIAL = "compatible-partial"
INCOMPATIBLE = "incompatible"


class Compatibility(NamedTuple):
    relation: str
    cycle: tuple[Triangulation, ...] = ()

    @property
    def compatible(self) -> bool:
        return self.relation != INCOMPATIBLE

    @property
    def weight(self) -> Optional[int]:
        return len(self.cycle) - 2 if self.cycle else None


def _in_convex_position(ps: PointSet, points) -> bool:
    pts = ps.points
    for p in points:
        others = [q for q in points if q != p]
        for a, b, c in combinations(others, 3):
            if in_triangle(pts[p], pts[a], pts[b], pts[c]):
                return False
    return True


def _shared_triangle(t: Triangulation, e: Edge, f: Edge) -> bool:
    corners = set(e) | set(f)
    return len(corners) == 3 and any(set(tri) == corners for tri in t.triangles)


def _classify_full(t: Triangulation, e: Edge, f: Edge) -> Compatibility:
    te, tf = t.edge_flip(e), t.edge_flip(f)
    if not _shared_triangle(t, e, f):
        tef = te.edge_flip(f)
        if tef.key != tf.edge_flip(e).key:
            raise InvariantViolation(f"flips of {e} and {f} do not commute")
        return Compatibility(INDEPENDENT, (t, te, tef, tf))
    pentagon = set(t.territory(e)) | set(t.territory(f))
    if not _in_convex_position(t.base, pentagon):
        return Compatibility(INCOMPATIBLE)
    cycle = (t, te, te.edge_flip(f), tf.edge_flip(e), tf)
    return Compatibility(WEAKLY_INDEPENDENT, cycle)


def refinement_cycle(s: Subdivision, start: Triangulation) -> tuple[Triangulation, ...]:
    """The refinements of a slack-2 subdivision, in cycle order starting at start."""
    nodes = {start.key: start}
    graph = nx.Graph()
    graph.add_node(start.key)
    frontier = [start]
    while frontier:
        t = frontier.pop()
        for x in t.flippable_elements:
            u = t.apply_flip(x)
            if not is_refinement(u, s):
                continue
            if u.key not in nodes:
                nodes[u.key] = u
                frontier.append(u)
            graph.add_edge(t.key, u.key)
    if any(d != 2 for _, d in graph.degree) or not nx.is_connected(graph):
        logger.error(
            f"refinements of a slack-{s.slack} subdivision do not form a cycle"
        )
        raise InvariantViolation("refinements do not span a cycle")
    order = [start.key]
    previous, current = None, start.key
    while True:
        step = min(k for k in graph[current] if k != previous)
        if step == start.key:
            break
        order.append(step)
        previous, current = current, step
    return tuple(nodes[k] for k in order)


def _classify_partial(
    t: Triangulation, x: FlipElement, y: FlipElement
) -> Compatibility:
    coarsening = partial_flip_pair(t, x, y)
    if coarsening is None:
        return Compatibility(INCOMPATIBLE)
    cycle = refinement_cycle(coarsening, t)
    tx, ty = t.apply_flip(x).key, t.apply_flip(y).key
    if {cycle[1].key, cycle[-1].key} != {tx, ty}:
        raise InvariantViolation(f"T[{x}] and T[{y}] are not the neighbours of T")
    return Compatibility(COMPATIBLE_PARTIAL, cycle)


def compatibility_classify(
    t: Triangulation, x: FlipElement, y: FlipElement, kind: Optional[str] = None
) -> Compatibility:
    """Classify a pair of distinct flippable elements of t.

    kind FULL (the default for two edges of a full triangulation) uses the territory
    test; kind PARTIAL uses the slack-2 coarsening.
    """
    if x == y:
        raise ValueError("elements must differ")
    for z in (x, y):
        if not t.is_flippable(z):
            raise ValueError(f"{z!r} is not flippable")
    if kind is None:
        both_edges = isinstance(x, Edge) and isinstance(y, Edge)
        kind = FULL if t.kind == FULL and both_edges else PARTIAL
    if kind == FULL:
        if not (isinstance(x, Edge) and isinstance(y, Edge)):
            raise ValueError("the full relation is defined for edges only")
        return _classify_full(t, x, y)
    return _classify_partial(t, x, y)


@dataclass
class Link:
    center: Triangulation
    kind: str
    graph: nx.Graph

    def weight(self, x: FlipElement, y: FlipElement) -> int:
        return self.graph.edges[x, y]["weight"]

    @property
    def degree_bound(self) -> int:
        """Lower bound on the number of elements compatible with any element."""
        n, h = self.center.base.n, self.center.base.h
        if self.kind == FULL:
            return max(math.ceil(n / 2 - 3), h - 4)
        return n - 4

    def low_degree_elements(self) -> list[FlipElement]:
        return [x for x in self.graph.nodes if self.graph.degree(x) < self.degree_bound]


def link_of(t: Triangulation, kind: Optional[str] = None) -> Link:
    kind = kind or t.kind
    if kind == FULL:
        elements = sorted(t.flippable_edges)
    else:
        elements = list(t.flippable_elements)
    graph = nx.Graph()
    graph.add_nodes_from(elements)
    for x, y in combinations(elements, 2):
        c = compatibility_classify(t, x, y, kind)
        if c.compatible:
            graph.add_edge(
                x,
                y,
                weight=c.weight,
                relation=c.relation,
                cycle=tuple(u.key for u in c.cycle),
            )
    logger.debug(
        f"{kind} link: {graph.number_of_nodes()} elements, "
        f"{graph.number_of_edges()} compatible pairs"
    )
    return Link(t, kind, graph)


def complement_has_c4(link: Link) -> bool:
    return has_c4(nx.complement(link.graph))


def lift_link_edge(
    flip_graph: FlipGraph, link: Link, x: FlipElement, y: FlipElement
) -> list[bytes]:
    """The witness cycle of link edge {x, y} without the center, from T[x] to T[y].

    Every step is checked against flip_graph.
    """
    cycle = list(link.graph.edges[x, y]["cycle"])
    center = link.center.key
    path = cycle[1:]
    if path[0] != link.center.apply_flip(x).key:
        path.reverse()
    if center in path:
        raise InvariantViolation("lifted path runs through the center")
    for a, b in zip(path, path[1:]):
        if not flip_graph.graph.has_edge(a, b):
            logger.error(f"lifted step {a.hex()} -> {b.hex()} is not a flip")
            raise InvariantViolation("lifted path leaves the flip graph")
    return path


__all__ = [
    "COMPATIBLE_PARTIAL",
    "Compatibility",
    "INCOMPATIBLE",
    "INDEPENDENT",
    "Link",
    "WEAKLY_INDEPENDENT",
    "complement_has_c4",
    "compatibility_classify",
    "lift_link_edge",
    "link_of",
    "refinement_cycle",
]
