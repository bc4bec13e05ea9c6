"""
Brute-force oracles, independent of the flip machinery.

These enumerate from definitions only: the hull as the points in no triangle of the
others, full triangulations as maximal non-crossing edge sets, partial triangulations
as the union over hull-containing vertex subsets, subdivisions as every validated
edge choice on such a subset. Exponential; meant for n <= 7 (n <= 5 for subdivisions).
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable, Optional

import networkx as nx
from loguru import logger

from ..geometry import PointSet, in_triangle, segments_cross
from ..subdivisions import Subdivision, is_refinement, make_subdivision
from ..triangulations import Edge, Triangulation, canonical_key, edge_set


def definitional_hull(ps: PointSet) -> frozenset[int]:
    pts = ps.points
    inside = set()
    for p in range(ps.n):
        others = [i for i in range(ps.n) if i != p]
        for a, b, c in combinations(others, 3):
            if in_triangle(pts[p], pts[a], pts[b], pts[c]):
                inside.add(p)
                break
    return frozenset(range(ps.n)) - inside


def maximal_noncrossing_sets(
    ps: PointSet, vertices: Optional[Iterable[int]] = None
) -> list[frozenset[Edge]]:
    """Every inclusion-maximal set of pairwise non-crossing segments on vertices."""
    chosen = sorted(ps.indices if vertices is None else vertices)
    pts = ps.points
    segments = [Edge.of(a, b) for a, b in combinations(chosen, 2)]
    crossers = [
        [
            j
            for j, f in enumerate(segments)
            if segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])
        ]
        for e in segments
    ]
    results = []
    picked: list[int] = []

    def extend(i: int) -> None:
        if i == len(segments):
            taken = set(picked)
            if all(
                j in taken or any(c in taken for c in crossers[j]) for j in range(i)
            ):
                results.append(frozenset(segments[j] for j in picked))
            return
        taken = set(picked)
        if not any(c in taken for c in crossers[i]):
            picked.append(i)
            extend(i + 1)
            picked.pop()
            # skipping i only pays off if a later segment can still cross it
            if not any(c > i for c in crossers[i]):
                return
        extend(i + 1)

    extend(0)
    logger.debug(f"{len(results)} maximal non-crossing sets on {len(chosen)} vertices")
    return results


def full_triangulation_keys(
    ps: PointSet, vertices: Optional[Iterable[int]] = None
) -> set[bytes]:
    chosen = frozenset(ps.indices if vertices is None else vertices)
    return {
        canonical_key(Triangulation(ps, chosen, edges))
        for edges in maximal_noncrossing_sets(ps, chosen)
    }


def partial_triangulation_keys(ps: PointSet) -> set[bytes]:
    """Union of full triangulations over every vertex set containing the hull."""
    inner = sorted(ps.inner)
    subsets = chain.from_iterable(combinations(inner, k) for k in range(len(inner) + 1))
    keys: set[bytes] = set()
    for extra in subsets:
        keys |= full_triangulation_keys(ps, set(ps.hull) | set(extra))
    return keys


def subdivision_keys(ps: PointSet) -> set[bytes]:
    """Every partial subdivision, from every hull-containing vertex set and every
    choice of non-hull segments on it that passes validation."""
    hull_edges = edge_set(ps.hull_edges)
    inner = sorted(ps.inner)
    subsets = chain.from_iterable(combinations(inner, k) for k in range(len(inner) + 1))
    keys: set[bytes] = set()
    for extra in subsets:
        vertices = frozenset(ps.hull) | frozenset(extra)
        segments = [
            Edge.of(a, b)
            for a, b in combinations(sorted(vertices), 2)
            if Edge.of(a, b) not in hull_edges
        ]
        for k in range(len(segments) + 1):
            for chosen in combinations(segments, k):
                s = make_subdivision(ps, vertices, hull_edges | frozenset(chosen))
                if s is not None:
                    keys.add(s.key)
    logger.debug(f"{len(keys)} subdivisions of {ps.n} points by brute force")
    return keys


def subdivision_covers(
    subdivisions: Iterable[Subdivision],
) -> set[tuple[bytes, bytes]]:
    """Covering pairs (finer, coarser) of the refinement order."""
    items = sorted(subdivisions, key=lambda s: s.key)
    order = nx.DiGraph()
    order.add_nodes_from(s.key for s in items)
    order.add_edges_from(
        (a.key, b.key)
        for a in items
        for b in items
        if a.key != b.key and is_refinement(a, b)
    )
    return set(nx.transitive_reduction(order).edges)


__all__ = [
    "definitional_hull",
    "full_triangulation_keys",
    "maximal_noncrossing_sets",
    "partial_triangulation_keys",
    "subdivision_covers",
    "subdivision_keys",
]
