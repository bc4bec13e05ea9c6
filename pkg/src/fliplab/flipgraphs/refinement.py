"""
The refinements of a subdivision inside a flip graph.

A triangulation refines S iff it triangulates every region of S independently, so the
induced subgraph is the Cartesian product of the flip graphs of the active regions.
"""

from __future__ import annotations

from functools import reduce

import networkx as nx
from loguru import logger

from ..errors import InvariantViolation
from ..subdivisions import Subdivision, is_refinement
from .flipgraph import (
    EDGE_FLIP,
    FlipGraph,
    build_bistellar_flip_graph,
    build_edge_flip_graph,
)


def region_flip_graphs(s: Subdivision, kind: str) -> list[nx.Graph]:
    """One flip graph per active region, built on the region's own points."""
    build = build_edge_flip_graph if kind == EDGE_FLIP else build_bistellar_flip_graph
    factors = []
    for region in s.active_regions:
        sub, _ = s.base.subset(region.points)
        factors.append(build(sub, cap=sub.n).graph)
    return factors


def product_graph(factors: list[nx.Graph]) -> nx.Graph:
    if not factors:
        single = nx.Graph()
        single.add_node(())
        return single
    return reduce(nx.cartesian_product, factors)


def refinement_subgraph(g: FlipGraph, s: Subdivision, verify: bool = True) -> nx.Graph:
    keys = [k for k in g.keys if is_refinement(g.triangulation(k), s)]
    induced = g.graph.subgraph(keys).copy()
    if verify:
        product = product_graph(region_flip_graphs(s, g.kind))
        if not nx.is_isomorphic(induced, product):
            logger.error(
                f"refinements of a slack-{s.slack} subdivision: {len(keys)} nodes, "
                f"not the product of {len(s.active_regions)} region flip graphs"
            )
            raise InvariantViolation("refinement subgraph is not the region product")
    return induced


__all__ = ["product_graph", "refinement_subgraph", "region_flip_graphs"]
