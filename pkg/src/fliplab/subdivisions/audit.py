"""
Counting audits for partially oriented subdivisions.

Given a subdivision whose inner edges are partly oriented toward one endpoint, the
number of edges left unoriented is bounded from below by the indegree histogram and
the (refined) slack. The audit recomputes every quantity and checks both bounds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from loguru import logger

from ..errors import InvariantViolation, NotWellOriented
from ..triangulations import Edge, locked_endpoints
from .coarseners import locked_inner_edges, unlocked_inner_edges
from .subdivision import Subdivision

Orientation = Mapping[Edge, Optional[int]]


@dataclass
class UnorientedAudit:
    histogram: dict[int, int]
    slack: int
    refined_slack: int
    unoriented: int
    well_oriented: bool
    offending_point: Optional[int] = None
    exact_count: Optional[int] = None
    lower_bound: Optional[Fraction] = None
    notes: list[str] = field(default_factory=list)

    def count(self, i: int) -> int:
        return self.histogram.get(i, 0)

    @property
    def holds(self) -> bool:
        if self.exact_count is not None and self.exact_count != self.unoriented:
            return False
        if self.lower_bound is not None and self.unoriented < self.lower_bound:
            return False
        return True


def locking_orientation(s: Subdivision) -> dict[Edge, Optional[int]]:
    """Each locked inner edge points at a locking endpoint (smallest index on ties)."""
    orientation = {e: None for e in s.inner_edges}
    for e in locked_inner_edges(s):
        orientation[e] = min(locked_endpoints(s, e))
    return orientation


def well_oriented_violation(s: Subdivision, orientation: Orientation) -> Optional[int]:
    """The first point breaking well-orientedness, or None."""
    incoming: dict[int, list[int]] = {}
    for e, head in orientation.items():
        if head is None:
            continue
        incoming.setdefault(head, []).append(e.other(head))
    for p in sorted(incoming):
        if p not in s.base.inner:
            return p
        ring = s.rotation[p]
        deg = len(ring)
        positions = [ring.index(q) for q in incoming[p]]
        for i, a in enumerate(positions):
            for b in positions[i + 1 :]:
                if (a - b) % deg not in (1, deg - 1):
                    return p
    return None


def unoriented_edges_audit(
    s: Subdivision, orientation: Orientation, require_well_oriented: bool = False
) -> UnorientedAudit:
    if s.bystanders:
        raise ValueError("the audit applies to subdivisions without bystanders")
    for e, head in orientation.items():
        if head is not None and head not in e:
            raise ValueError(f"head {head} is not an endpoint of {e}")
    n_vertices, h = len(s.vertices), s.base.h
    indegree = Counter(head for head in orientation.values() if head is not None)
    histogram = Counter(indegree.get(p, 0) for p in s.inner_vertices)
    unoriented = sum(1 for e in s.inner_edges if orientation.get(e) is None)
    d, d_star = s.slack, s.refined_slack
    bad_point = well_oriented_violation(s, orientation)
    if require_well_oriented and bad_point is not None:
        logger.error(f"orientation is not well-oriented at {bad_point}")
        raise NotWellOriented(bad_point)

    audit = UnorientedAudit(
        histogram=dict(histogram),
        slack=d,
        refined_slack=d_star,
        unoriented=unoriented,
        well_oriented=bad_point is None,
        offending_point=bad_point,
    )
    hull_heads = any(p in s.base.hull for p in indegree)
    if not hull_heads and all(i <= 3 for i in histogram if histogram[i]):
        audit.exact_count = (
            n_vertices - 3 - audit.count(3) - d + audit.count(1) + 2 * audit.count(0)
        )
        if audit.exact_count < h - 3 - d:
            audit.notes.append("exact count below h - 3 - D")
    if audit.well_oriented:
        audit.lower_bound = Fraction(n_vertices, 2) - 2 - Fraction(d + d_star, 2)
    if not audit.holds:
        logger.error(f"unoriented edges audit failed: {audit}")
        raise InvariantViolation(f"unoriented edges audit failed: {audit}")
    return audit


def full_coarsening_bound(s: Subdivision) -> Fraction:
    n, h = s.base.n, s.base.h
    return max(Fraction(n, 2) - 2, Fraction(h - 3))


def full_coarsening_audit(s: Subdivision) -> bool:
    """Full subdivisions with every inner edge locked have slack >= max(n/2-2, h-3)."""
    if unlocked_inner_edges(s):
        raise ValueError("subdivision still has an unlocked inner edge")
    unoriented_edges_audit(s, locking_orientation(s), require_well_oriented=True)
    ok = s.slack >= full_coarsening_bound(s)
    if not ok:
        logger.error(f"maximal full subdivision with slack {s.slack} below bound")
    return ok
