"""
Chains of perfect coarsenings and the checks built on them.

A subdivision with a chain of perfect coarsenings up to the trivial subdivision is
regular. The search here never assumes that: every chain found is cross-checked with
the LP.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from loguru import logger

from ..errors import CapExceeded, InvariantViolation
from ..geometry import PointSet
from ..subdivisions import (
    Poset,
    Subdivision,
    build_poset,
    perfect_coarsening_moves,
    prime_coarseners,
)
from .heights import HeightFunction, compliant_dim, omega_labeling
from .regular import is_regular_subdivision, is_regular_triangulation

DEFAULT_CHAIN_CAP = 8


@dataclass
class ChainResult:
    found: bool
    chain: list[Subdivision] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.found

    @property
    def moves(self) -> int:
        return max(0, len(self.chain) - 1)


def perfect_chain_to_trivial(s: Subdivision, cap: Optional[int] = None) -> ChainResult:
    cap = DEFAULT_CHAIN_CAP if cap is None else cap
    if s.base.n > cap:
        logger.error(f"chain search refused: n={s.base.n} exceeds cap {cap}")
        raise CapExceeded(s.base.n, cap)
    target = Subdivision.trivial(s.base).key
    dead: set[bytes] = set()

    def search(current: Subdivision) -> Optional[list[Subdivision]]:
        if current.key == target:
            return [current]
        if current.key in dead:
            return None
        for move in perfect_coarsening_moves(current, check=False):
            rest = search(move.result)
            if rest is not None:
                return [current] + rest
        dead.add(current.key)
        return None

    chain = search(s)
    if chain is None:
        return ChainResult(False)
    if not is_regular_subdivision(s):
        logger.error(f"slack-{s.slack} subdivision with a perfect chain is not regular")
        raise InvariantViolation(
            "perfect chain to the trivial subdivision, yet not regular"
        )
    return ChainResult(True, chain)


def regularity_preservation_check(s0: Subdivision, s1: Subdivision) -> Optional[bool]:
    """For s1 a perfect coarsening of s0: None when the premise fails, else the verdict.

    Premise: s1 regular and dim of its compliant space equal to |V(s1)| - sl(s1).
    Conclusion: the same two facts for s0.
    """
    if s1.slack != s0.slack + 1:
        raise ValueError("s1 must be a perfect coarsening of s0")
    dim1, _ = compliant_dim(s1, check=False)
    if dim1 != len(s1.vertices) - s1.slack or not is_regular_subdivision(s1):
        return None
    dim0, _ = compliant_dim(s0, check=False)
    holds = dim0 == len(s0.vertices) - s0.slack and bool(is_regular_subdivision(s0))
    if not holds:
        logger.error(f"regularity not preserved below a slack-{s1.slack} subdivision")
    return holds


def perfect_coarsener_label_constancy(s: Subdivision, w: HeightFunction) -> bool:
    """All edges at a perfect coarsener receive the same label under w."""
    labels = omega_labeling(s, w)
    for c in prime_coarseners(s):
        if not c.is_perfect:
            continue
        if len({labels[e] for e in c.incident_edges}) > 1:
            logger.warning(f"labels differ around perfect coarsener {sorted(c.points)}")
            return False
    return True


ALL_REGULAR_PREDICATES = (
    "all-triangulations-regular",
    "all-subdivisions-regular",
    "height-max-is-n-minus-3",
    "direct-coarsenings-are-perfect",
    "height-equals-slack",
)


def all_regular_predicates(
    ps: PointSet, poset: Optional[Poset] = None
) -> dict[str, bool]:
    """The five conditions that hold or fail together on any point set."""
    poset = poset or build_poset(ps)
    subdivisions = poset.subdivisions
    triangulations = [s for s in subdivisions if s.slack == 0]
    values = {
        "all-triangulations-regular": all(
            is_regular_triangulation(s.to_triangulation()) for s in triangulations
        ),
        "all-subdivisions-regular": all(
            is_regular_subdivision(s) for s in subdivisions
        ),
        "height-max-is-n-minus-3": poset.height_max == ps.n - 3,
        "direct-coarsenings-are-perfect": poset.is_perfect_everywhere,
        "height-equals-slack": poset.height_equals_slack,
    }
    if len(set(values.values())) != 1:
        logger.error(f"equivalent predicates disagree on {ps.n} points: {values}")
    return values


__all__ = [
    "ALL_REGULAR_PREDICATES",
    "ChainResult",
    "DEFAULT_CHAIN_CAP",
    "all_regular_predicates",
    "perfect_chain_to_trivial",
    "perfect_coarsener_label_constancy",
    "regularity_preservation_check",
]
