"""
Edge and bistellar flip graphs as networkx graphs.

Nodes are canonical keys; each node carries its Triangulation under the attribute
"triangulation". Each edge carries the flip element applied from its smaller-key end
("flip") together with that end ("source"), so a path can be replayed as flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx
from loguru import logger

from ..errors import CapExceeded, InvariantViolation
from ..geometry import PointSet
from ..triangulations import (
    FlipElement,
    Triangulation,
    bistellar_flip_rule,
    edge_flip_rule,
    element_label,
    flip_closure,
    seed_full_triangulation,
)

EDGE_FLIP = "edge-flip"
BISTELLAR = "bistellar"

DEFAULT_EDGE_FLIP_CAP = 10
DEFAULT_BISTELLAR_CAP = 8


@dataclass
class FlipGraph:
    base: PointSet
    kind: str
    graph: nx.Graph

    def triangulation(self, key: bytes) -> Triangulation:
        return self.graph.nodes[key]["triangulation"]

    @property
    def keys(self) -> list[bytes]:
        return sorted(self.graph.nodes)

    @property
    def triangulations(self) -> list[Triangulation]:
        return [self.triangulation(k) for k in self.keys]

    def degree(self, key: bytes) -> int:
        return self.graph.degree(key)

    def flip_between(self, a: bytes, b: bytes) -> FlipElement:
        """The element whose flip turns node a into node b."""
        data = self.graph.edges[a, b]
        if data["source"] == a:
            return data["flip"]
        return self.triangulation(b).inverse_element(data["flip"])

    def replay(self, path: list[bytes]) -> Triangulation:
        """Apply the flips along path starting from its first node."""
        t = self.triangulation(path[0])
        for a, b in zip(path, path[1:]):
            t = t.apply_flip(self.flip_between(a, b))
            if t.key != b:
                raise InvariantViolation(
                    f"replayed flip {a.hex()} -> {b.hex()} diverged"
                )
        return t

    def __len__(self) -> int:
        return self.graph.number_of_nodes()


def _build(ps: PointSet, kind: str, rule) -> FlipGraph:
    nodes, adjacency = flip_closure(seed_full_triangulation(ps), rule)
    graph = nx.Graph()
    for key in sorted(nodes):
        graph.add_node(key, triangulation=nodes[key])
    for (a, b), x in sorted(adjacency.items()):
        graph.add_edge(a, b, flip=x, source=a, label=element_label(x))
    if not nx.is_connected(graph):
        logger.error(f"{kind} flip graph on {ps.n} points is not connected")
        raise InvariantViolation(f"{kind} flip graph is not connected")
    logger.info(
        f"{kind} flip graph of {ps.n} points: {graph.number_of_nodes()} nodes, "
        f"{graph.number_of_edges()} edges"
    )
    return FlipGraph(ps, kind, graph)


def build_edge_flip_graph(ps: PointSet, cap: Optional[int] = None) -> FlipGraph:
    cap = DEFAULT_EDGE_FLIP_CAP if cap is None else cap
    if ps.n > cap:
        logger.error(f"edge flip graph refused: n={ps.n} exceeds cap {cap}")
        raise CapExceeded(ps.n, cap)
    return _build(ps, EDGE_FLIP, edge_flip_rule)


def build_bistellar_flip_graph(ps: PointSet, cap: Optional[int] = None) -> FlipGraph:
    cap = DEFAULT_BISTELLAR_CAP if cap is None else cap
    if ps.n > cap:
        logger.error(f"bistellar flip graph refused: n={ps.n} exceeds cap {cap}")
        raise CapExceeded(ps.n, cap)
    return _build(ps, BISTELLAR, bistellar_flip_rule)


def min_degree(g) -> int:
    graph = g.graph if isinstance(g, FlipGraph) else g
    return min(d for _, d in graph.degree)


def is_triangle_free(g) -> bool:
    graph = g.graph if isinstance(g, FlipGraph) else g
    return not any(nx.triangles(graph).values())


def has_c4(graph: nx.Graph) -> bool:
    """Whether graph contains a 4-cycle (not necessarily induced)."""
    nodes = list(graph.nodes)
    for i, a in enumerate(nodes):
        na = set(graph[a])
        for b in nodes[i + 1 :]:
            if len(na & set(graph[b]) - {a, b}) >= 2:
                return True
    return False


__all__ = [
    "BISTELLAR",
    "DEFAULT_BISTELLAR_CAP",
    "DEFAULT_EDGE_FLIP_CAP",
    "EDGE_FLIP",
    "FlipGraph",
    "build_bistellar_flip_graph",
    "build_edge_flip_graph",
    "has_c4",
    "is_triangle_free",
    "min_degree",
]
