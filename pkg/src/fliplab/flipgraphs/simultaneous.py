"""
Largest sets of simultaneously flippable edges (pairwise independently flippable).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Optional

import networkx as nx
from loguru import logger

from ..errors import CapExceeded
from ..triangulations import FULL, Edge, Triangulation
from .links import INDEPENDENT, compatibility_classify

DEFAULT_SIMFLIP_CAP = 10


def independence_graph(t: Triangulation) -> nx.Graph:
    graph = nx.Graph()
    edges = sorted(t.flippable_edges)
    graph.add_nodes_from(edges)
    for e, f in combinations(edges, 2):
        if compatibility_classify(t, e, f, FULL).relation == INDEPENDENT:
            graph.add_edge(e, f)
    return graph


def max_simultaneously_flippable(
    t: Triangulation, cap: Optional[int] = None
) -> frozenset[Edge]:
    cap = DEFAULT_SIMFLIP_CAP if cap is None else cap
    if t.base.n > cap:
        logger.error(
            f"simultaneous flip search refused: n={t.base.n} exceeds cap {cap}"
        )
        raise CapExceeded(t.base.n, cap)
    graph = independence_graph(t)
    if graph.number_of_nodes() == 0:
        return frozenset()
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return frozenset(clique)


def simultaneous_lower_bound(n: int) -> int:
    return max(0, math.ceil((n - 4) / 5))


def flippable_plus_simultaneous_bound(n: int) -> Fraction:
    return Fraction(4 * (n - 4), 5)


__all__ = [
    "DEFAULT_SIMFLIP_CAP",
    "flippable_plus_simultaneous_bound",
    "independence_graph",
    "max_simultaneously_flippable",
    "simultaneous_lower_bound",
]
