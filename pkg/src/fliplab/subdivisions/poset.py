"""
The refinement poset of all partial subdivisions of a small point set.

Starting from every partial triangulation, direct coarsenings are applied breadth-first
until S_triv. The Hasse diagram is a networkx DiGraph with edges pointing from the finer
to the coarser subdivision.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx
from loguru import logger

from ..errors import CapExceeded
from ..geometry import PointSet
from ..triangulations import (
    Triangulation,
    bistellar_flip_rule,
    edge_flip_rule,
    flip_closure,
    seed_full_triangulation,
)
from .coarseners import coarsening_moves, full_coarsening_moves
from .subdivision import Subdivision

DEFAULT_POSET_CAP = 8


@dataclass
class Poset:
    base: PointSet
    hasse: nx.DiGraph

    def subdivision(self, key: bytes) -> Subdivision:
        return self.hasse.nodes[key]["subdivision"]

    def height(self, key: bytes) -> int:
        return self.hasse.nodes[key]["height"]

    def slack(self, key: bytes) -> int:
        return self.hasse.nodes[key]["slack"]

    @property
    def subdivisions(self) -> list[Subdivision]:
        return [self.subdivision(k) for k in sorted(self.hasse.nodes)]

    @property
    def height_max(self) -> int:
        return max(nx.get_node_attributes(self.hasse, "height").values())

    @property
    def is_perfect_everywhere(self) -> bool:
        """Every covering pair raises the slack by exactly one."""
        return all(d["perfect"] for _, _, d in self.hasse.edges(data=True))

    @property
    def height_equals_slack(self) -> bool:
        return all(d["height"] == d["slack"] for _, d in self.hasse.nodes(data=True))

    def direct_refinements(self, key: bytes) -> list[bytes]:
        return sorted(self.hasse.predecessors(key))

    def direct_coarsenings(self, key: bytes) -> list[bytes]:
        return sorted(self.hasse.successors(key))

    def __len__(self) -> int:
        return self.hasse.number_of_nodes()


def _assign_heights(hasse: nx.DiGraph) -> None:
    for key in nx.topological_sort(hasse):
        below = [hasse.nodes[k]["height"] for k in hasse.predecessors(key)]
        hasse.nodes[key]["height"] = 1 + max(below) if below else 0


def _close_upward(roots: Iterable[Subdivision], moves) -> nx.DiGraph:
    hasse = nx.DiGraph()
    queue = deque()
    for s in roots:
        if s.key not in hasse:
            hasse.add_node(s.key, subdivision=s, slack=s.slack)
            queue.append(s)
    while queue:
        s = queue.popleft()
        for c in moves(s):
            k = c.result.key
            if k not in hasse:
                hasse.add_node(k, subdivision=c.result, slack=c.result.slack)
                queue.append(c.result)
            hasse.add_edge(s.key, k, move=c.move.label(), perfect=c.perfect)
    _assign_heights(hasse)
    return hasse


def all_partial_triangulations(ps: PointSet) -> list[Triangulation]:
    nodes, _ = flip_closure(seed_full_triangulation(ps), bistellar_flip_rule)
    return [nodes[k] for k in sorted(nodes)]


def build_poset(ps: PointSet, cap: Optional[int] = None) -> Poset:
    """All partial subdivisions of ps with Hasse edges and heights."""
    cap = DEFAULT_POSET_CAP if cap is None else cap
    if ps.n > cap:
        logger.error(f"poset enumeration refused: n={ps.n} exceeds cap {cap}")
        raise CapExceeded(ps.n, cap)
    roots = [Subdivision.of(t) for t in all_partial_triangulations(ps)]
    hasse = _close_upward(roots, coarsening_moves)
    poset = Poset(ps, hasse)
    logger.info(
        f"Poset of {ps.n} points: {len(poset)} subdivisions, "
        f"{hasse.number_of_edges()} Hasse edges, height_max {poset.height_max}"
    )
    return poset


def build_full_poset(ps: PointSet, cap: Optional[int] = None) -> Poset:
    """All full subdivisions (every point used, connected, no bystanders)."""
    cap = DEFAULT_POSET_CAP if cap is None else cap
    if ps.n > cap:
        logger.error(f"full poset enumeration refused: n={ps.n} exceeds cap {cap}")
        raise CapExceeded(ps.n, cap)
    nodes, _ = flip_closure(seed_full_triangulation(ps), edge_flip_rule)
    roots = [Subdivision.of(nodes[k]) for k in sorted(nodes)]
    hasse = _close_upward(roots, full_coarsening_moves)
    logger.info(f"Full poset of {ps.n} points: {hasse.number_of_nodes()} subdivisions")
    return Poset(ps, hasse)


def maximal_elements(poset: Poset) -> list[Subdivision]:
    return [
        poset.subdivision(k)
        for k in sorted(poset.hasse.nodes)
        if poset.hasse.out_degree(k) == 0
    ]
