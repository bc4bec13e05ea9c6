"""
Exact vertex connectivity by unit-capacity max-flow.

Every node v is split into v_in -> v_out with capacity 1, and every undirected edge
{u, v} becomes u_out -> v_in and v_out -> u_in. The number of internally disjoint
s-t paths is then the max-flow from s_out to t_in.

The global value follows the pair scheme of Esfahanian and Hakimi: with v a vertex of
minimum degree, it suffices to check v against its non-neighbours and the non-adjacent
pairs among its neighbours.

The local value over pairs at distance 2 alone already determines the global value
on a connected graph that is not complete.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Hashable, Optional

import networkx as nx
from loguru import logger
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from ..errors import Disconnected
from .flipgraph import FlipGraph


def _as_graph(g) -> nx.Graph:
    return g.graph if isinstance(g, FlipGraph) else g


def _split_digraph(graph: nx.Graph) -> tuple[nx.DiGraph, dict[Hashable, int]]:
    index = {v: i for i, v in enumerate(sorted(graph.nodes))}
    split = nx.DiGraph()
    for i in index.values():
        split.add_edge(2 * i, 2 * i + 1, capacity=1)
    for u, v in graph.edges:
        a, b = index[u], index[v]
        split.add_edge(2 * a + 1, 2 * b, capacity=1)
        split.add_edge(2 * b + 1, 2 * a, capacity=1)
    return split, index


def _disjoint_paths(split, residual, index, s, t, cutoff=None) -> int:
    return nx.maximum_flow_value(
        split,
        2 * index[s] + 1,
        2 * index[t],
        flow_func=edmonds_karp,
        residual=residual,
        cutoff=cutoff,
    )


def local_vertex_connectivity(g, s: Hashable, t: Hashable) -> int:
    """Most internally vertex-disjoint s-t paths (an s-t edge counts once)."""
    graph = _as_graph(g)
    if s == t:
        raise ValueError("endpoints must differ")
    split, index = _split_digraph(graph)
    residual = build_residual_network(split, "capacity")
    return _disjoint_paths(split, residual, index, s, t)


def vertex_connectivity(g) -> int:
    graph = _as_graph(g)
    n = graph.number_of_nodes()
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 nodes")
    if not nx.is_connected(graph):
        logger.error(f"graph with {n} nodes is not connected")
        raise Disconnected(f"graph with {n} nodes is not connected")
    v = min(sorted(graph.nodes), key=graph.degree)
    k = graph.degree(v)
    if k == n - 1 and all(d == n - 1 for _, d in graph.degree):
        return n - 1

    split, index = _split_digraph(graph)
    residual = build_residual_network(split, "capacity")
    neighbours = set(graph[v])
    pairs = [(v, w) for w in sorted(graph.nodes) if w != v and w not in neighbours]
    pairs += [
        (x, y)
        for x, y in combinations(sorted(neighbours), 2)
        if not graph.has_edge(x, y)
    ]
    for s, t in pairs:
        k = min(k, _disjoint_paths(split, residual, index, s, t, cutoff=k))
    logger.debug(f"vertex connectivity {k} from {len(pairs)} flows on {n} nodes")
    return k


def distance_two_pairs(g) -> list[tuple[Hashable, Hashable]]:
    """Non-adjacent pairs with a common neighbour, each once and sorted."""
    graph = _as_graph(g)
    pairs = set()
    for v in graph.nodes:
        for x, y in combinations(sorted(graph[v]), 2):
            if not graph.has_edge(x, y):
                pairs.add((x, y))
    return sorted(pairs)


def local_menger_connectivity(
    g, sample: Optional[int] = None, seed: int = 0
) -> Optional[int]:
    """Fewest disjoint paths over the pairs at distance 2, or None if there are none.

    With every pair this equals the vertex connectivity of a connected graph; with a
    seeded sample of pairs it is an upper bound on it.
    """
    graph = _as_graph(g)
    pairs = distance_two_pairs(graph)
    if not pairs:
        return None
    if sample is not None and len(pairs) > sample:
        pairs = sorted(random.Random(seed).sample(pairs, sample))
    split, index = _split_digraph(graph)
    residual = build_residual_network(split, "capacity")
    k = min(_disjoint_paths(split, residual, index, s, t) for s, t in pairs)
    logger.debug(f"local Menger value {k} over {len(pairs)} distance-2 pairs")
    return k


__all__ = [
    "distance_two_pairs",
    "local_menger_connectivity",
    "local_vertex_connectivity",
    "vertex_connectivity",
]
