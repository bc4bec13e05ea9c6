"""
Coarseners and direct coarsenings of partial subdivisions.

A direct coarsening of S is one of
- adding a skipped point as a bystander,
- removing an inner edge locked at neither endpoint,
- isolating a prime coarsener (removing every edge incident to it).
The perfect ones raise the slack by exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional, Union

import networkx as nx
from loguru import logger

from ..errors import InvariantViolation
from ..triangulations import Edge, locked_endpoints
from .subdivision import Subdivision, is_refinement, make_subdivision, partial_flip

POINT = "point"
EDGE = "edge"
COARSENER = "coarsener"


@dataclass(frozen=True)
class Coarsener:
    points: frozenset[int]
    incident_edges: frozenset[Edge]
    is_prime: bool = True

    @property
    def increment(self) -> int:
        return len(self.incident_edges) - 2 * len(self.points)

    @property
    def is_perfect(self) -> bool:
        return self.is_prime and self.increment == 1


class Move(NamedTuple):
    kind: str
    target: Union[int, Edge, frozenset]

    def label(self) -> str:
        if self.kind == POINT:
            return f"+p{self.target}"
        if self.kind == EDGE:
            return f"-e{self.target}"
        return "-U" + ",".join(str(p) for p in sorted(self.target))


class Coarsening(NamedTuple):
    move: Move
    result: Subdivision
    increment: int

    @property
    def perfect(self) -> bool:
        return self.increment == 1


def locked_inner_edges(s: Subdivision) -> frozenset[Edge]:
    return frozenset(e for e in s.inner_edges if locked_endpoints(s, e))


def unlocked_inner_edges(s: Subdivision) -> frozenset[Edge]:
    return s.inner_edges - locked_inner_edges(s)


def incident_edges(s: Subdivision, points) -> frozenset[Edge]:
    return frozenset(e for e in s.edges if e.u in points or e.v in points)


def isolate(s: Subdivision, points) -> Optional[Subdivision]:
    """S without every edge incident to points, if that is still a subdivision."""
    return make_subdivision(
        s.base, s.vertices, s.edges - incident_edges(s, points), crossings=False
    )


def is_coarsener(s: Subdivision, points) -> bool:
    points = frozenset(points)
    if not points or not points <= s.involved:
        return False
    return isolate(s, points) is not None


def prime_coarseners(s: Subdivision) -> list[Coarsener]:
    """Inclusion-minimal coarseners whose incident edges are all locked.

    Searches connected clusters of fully-locked involved points by increasing size; a
    cluster containing an earlier hit is not minimal.
    """
    if not s.inner_edges:
        return []
    locked = locked_inner_edges(s)
    candidates = sorted(
        p for p in s.involved if all(Edge.of(p, q) in locked for q in s.rotation[p])
    )
    cluster_graph = nx.Graph()
    cluster_graph.add_nodes_from(candidates)
    cluster_graph.add_edges_from(
        (e.u, e.v) for e in locked if e.u in cluster_graph and e.v in cluster_graph
    )
    found: list[frozenset[int]] = []
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            points = frozenset(combo)
            if any(f <= points for f in found):
                continue
            if size > 1 and not nx.is_connected(cluster_graph.subgraph(combo)):
                continue
            if isolate(s, points) is not None:
                found.append(points)
    coarseners = [Coarsener(u, incident_edges(s, u)) for u in found]
    logger.debug(
        f"prime coarseners: {[sorted(c.points) for c in coarseners]} "
        f"from {len(candidates)} candidates"
    )
    return coarseners


def coarsening_moves(s: Subdivision) -> list[Coarsening]:
    """Every direct coarsening of s together with the move producing it."""
    moves = []
    base_slack = s.slack
    for p in sorted(s.skipped):
        result = Subdivision(s.base, s.vertices | {p}, s.edges)
        moves.append(Coarsening(Move(POINT, p), result, result.slack - base_slack))
    for e in sorted(unlocked_inner_edges(s)):
        result = Subdivision(s.base, s.vertices, s.edges - {e})
        moves.append(Coarsening(Move(EDGE, e), result, result.slack - base_slack))
    for c in prime_coarseners(s):
        result = Subdivision(s.base, s.vertices, s.edges - c.incident_edges)
        moves.append(
            Coarsening(Move(COARSENER, c.points), result, result.slack - base_slack)
        )
    return moves


def direct_coarsenings(s: Subdivision) -> list[Subdivision]:
    return [c.result for c in coarsening_moves(s)]


def perfect_coarsening_moves(s: Subdivision, check: bool = True) -> list[Coarsening]:
    perfect = [c for c in coarsening_moves(s) if c.perfect]
    bound = s.base.n - 3 - s.slack
    if check and len(perfect) < bound:
        logger.error(
            f"only {len(perfect)} perfect coarsenings for slack {s.slack}, "
            f"expected at least {bound}"
        )
        raise InvariantViolation(
            f"{len(perfect)} perfect coarsenings < n - 3 - slack = {bound}"
        )
    return perfect


def perfect_coarsenings(s: Subdivision, check: bool = True) -> list[Subdivision]:
    return [c.result for c in perfect_coarsening_moves(s, check)]


# ---------------------------------------------------------------------------
# Full subdivisions
# ---------------------------------------------------------------------------


def full_coarsening_moves(s: Subdivision) -> list[Coarsening]:
    """Coarsenings that stay full: removal of a single unlocked inner edge."""
    base_slack = s.slack
    out = []
    for e in sorted(unlocked_inner_edges(s)):
        result = Subdivision(s.base, s.vertices, s.edges - {e})
        out.append(Coarsening(Move(EDGE, e), result, result.slack - base_slack))
    return out


def maximal_full_coarsening(s: Subdivision) -> Subdivision:
    """Greedily remove the smallest unlocked inner edge until all inner edges lock."""
    current = Subdivision.of(s)
    while True:
        free = sorted(unlocked_inner_edges(current))
        if not free:
            return current
        current = Subdivision(current.base, current.vertices, current.edges - {free[0]})


def partial_flip_pair(t, x, y) -> Optional[Subdivision]:
    """The slack-2 coarsening refined by t, t[x] and t[y], if x and y are compatible.

    Any such coarsening covers pFlip(t, x) in the poset, so it is one of that
    subdivision's perfect coarsenings.
    """
    ty = t.apply_flip(y)
    for c in perfect_coarsening_moves(partial_flip(t, x), check=False):
        if is_refinement(ty, c.result):
            return c.result
    return None


__all__ = [
    "COARSENER",
    "Coarsener",
    "Coarsening",
    "EDGE",
    "Move",
    "POINT",
    "coarsening_moves",
    "direct_coarsenings",
    "full_coarsening_moves",
    "incident_edges",
    "is_coarsener",
    "isolate",
    "locked_inner_edges",
    "maximal_full_coarsening",
    "partial_flip_pair",
    "perfect_coarsening_moves",
    "perfect_coarsenings",
    "prime_coarseners",
    "unlocked_inner_edges",
]
