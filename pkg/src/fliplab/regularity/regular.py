"""
Exact regularity decisions.

A subdivision is regular when some height function on its vertices is linear on every
region and folds every inner edge into a strict valley. The strict inequalities are
handled with a margin t: maximize t subject to fold(e) - t >= 0, the compliance
equalities and t <= 1. The subdivision is regular iff the optimum is positive.

Triangulations are also decided over all of P, where skipped points must additionally
lift strictly above the triangle containing them.

Positive answers come with a witness that ``verify_lifting`` re-checks independently;
negative answers can be backed by a Farkas certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from loguru import logger

from ..errors import CapExceeded, InvariantViolation
from ..geometry import PointSet
from ..subdivisions import Subdivision
from ..triangulations import (
    Triangulation,
    edge_flip_rule,
    iter_closure,
    seed_full_triangulation,
)
from .heights import (
    HeightFunction,
    above_plane_form,
    compliance_forms,
    fold_form,
    paraboloid_heights,
)
from .simplex import EQ, GE, LE, LinearProgram

Row = tuple[str, dict[int, int]]


@dataclass
class FarkasCertificate:
    """y >= 0 summing to 1 on strict rows, free z on equalities, y.M + z.E = 0."""

    strict: dict[str, Fraction]
    equalities: dict[str, Fraction]

    def to_dict(self) -> dict:
        return {
            "strict": {k: str(v) for k, v in self.strict.items() if v},
            "equalities": {k: str(v) for k, v in self.equalities.items() if v},
        }


@dataclass
class RegularityResult:
    regular: bool
    margin: Fraction
    witness: Optional[HeightFunction] = None
    certificate: Optional[FarkasCertificate] = None
    pivots: int = 0
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.regular

    def to_json(self) -> str:
        return json.dumps(
            {
                "regular": self.regular,
                "margin": str(self.margin),
                "witness": json.loads(self.witness.to_json()) if self.witness else None,
                "certificate": self.certificate.to_dict() if self.certificate else None,
                "pivots": self.pivots,
            },
            sort_keys=True,
        )


# ---------------------------------------------------------------------------
# Constraint systems
# ---------------------------------------------------------------------------


def _subdivision_system(s: Subdivision) -> tuple[list[int], list[Row], list[Row]]:
    strict = [(f"fold {e}", fold_form(s, e)) for e in sorted(s.inner_edges)]
    equalities = [
        (f"region {','.join(map(str, boundary))} #{i}", form)
        for i, (boundary, form) in enumerate(compliance_forms(s))
    ]
    return sorted(s.vertices), strict, equalities


def _triangulation_system(t: Triangulation) -> tuple[list[int], list[Row], list[Row]]:
    strict = [(f"fold {e}", fold_form(t, e)) for e in sorted(t.inner_edges)]
    for p in sorted(t.skipped):
        strict.append((f"skip {p}", above_plane_form(t.base, t.locate(p), p)))
    return sorted(t.base.indices), strict, []


def _margin_lp(order, strict: list[Row], equalities: list[Row]):
    column = {v: j for j, v in enumerate(order)}
    t_col = len(order)
    lp = LinearProgram(len(order) + 1)
    for _, form in strict:
        coeffs = {column[i]: c for i, c in form.items()}
        coeffs[t_col] = -1
        lp.add(coeffs, GE, 0)
    for _, form in equalities:
        lp.add({column[i]: c for i, c in form.items()}, EQ, 0)
    lp.add({t_col: 1}, LE, 1)
    objective = {t_col: 1}
    result = lp.maximize(objective)
    if not result.optimal:
        raise InvariantViolation(f"margin LP ended {result.status}")
    witness = HeightFunction({v: result.x[column[v]] for v in order})
    return result, witness


def farkas_from_system(
    order, strict: list[Row], equalities: list[Row]
) -> Optional[FarkasCertificate]:
    """y >= 0, sum(y) = 1, z free with y.M + z.E = 0, re-verified exactly."""
    if not strict:
        return None
    column = {v: j for j, v in enumerate(order)}
    ny, nz = len(strict), len(equalities)
    lp = LinearProgram(ny + nz, nonneg=range(ny))
    for v in order:
        coeffs = {}
        for k, (_, form) in enumerate(strict):
            if v in form:
                coeffs[k] = form[v]
        for k, (_, form) in enumerate(equalities):
            if v in form:
                coeffs[ny + k] = form[v]
        lp.add(coeffs, EQ, 0)
    lp.add({k: 1 for k in range(ny)}, EQ, 1)
    result = lp.maximize({})
    if not result.optimal:
        return None
    y, z = result.x[:ny], result.x[ny:]
    combined = [Fraction(0)] * len(order)
    for weight, (_, form) in zip(list(y) + list(z), strict + equalities):
        for i, c in form.items():
            combined[column[i]] += weight * c
    if any(combined) or any(v < 0 for v in y) or sum(y) != 1:
        logger.error("Farkas certificate failed exact verification")
        raise InvariantViolation("Farkas certificate does not verify")
    return FarkasCertificate(
        {label: v for (label, _), v in zip(strict, y)},
        {label: v for (label, _), v in zip(equalities, z)},
    )


def farkas_certificate(
    g: Union[Subdivision, Triangulation]
) -> Optional[FarkasCertificate]:
    if isinstance(g, Triangulation):
        return farkas_from_system(*_triangulation_system(g))
    return farkas_from_system(*_subdivision_system(g))


# ---------------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------------


def verify_lifting(
    g: Union[Subdivision, Triangulation],
    w: HeightFunction,
    points: Optional[Iterable[int]] = None,
) -> bool:
    """Every region's points are coplanar under w and every other point lifts above."""
    chosen = sorted(g.vertices if points is None else points)
    for region in Subdivision.of(g).regions:
        frame = region.boundary[:3]
        members = region.points
        for p in chosen:
            if p in frame:
                continue
            height = w.value(above_plane_form(g.base, frame, p))
            if p in members and height != 0:
                return False
            if p not in members and height <= 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Decisions
# ---------------------------------------------------------------------------


def _decide(system, points, g, certify: bool) -> RegularityResult:
    order, strict, equalities = system
    lp_result, witness = _margin_lp(order, strict, equalities)
    result = RegularityResult(
        lp_result.value > 0, lp_result.value, pivots=lp_result.pivots
    )
    if result.regular:
        if not verify_lifting(g, witness, points):
            logger.error("LP witness failed lower-hull verification")
            raise InvariantViolation("regularity witness does not verify")
        result.witness = witness
    elif certify:
        result.certificate = farkas_from_system(order, strict, equalities)
        if result.certificate is None:
            raise InvariantViolation("non-positive margin without a Farkas certificate")
    return result


def is_regular_subdivision(s: Subdivision, certify: bool = False) -> RegularityResult:
    """Regularity over V(S): heights on the vertices (bystanders included) only."""
    result = _decide(_subdivision_system(s), None, s, certify)
    logger.debug(f"subdivision of slack {s.slack}: regular={result.regular}")
    return result


def is_regular_triangulation(
    t: Triangulation, certify: bool = False
) -> RegularityResult:
    """Regularity over all of P: skipped points lift strictly above their triangle."""
    result = _decide(_triangulation_system(t), t.base.indices, t, certify)
    logger.debug(f"{t.kind} triangulation: regular={result.regular}")
    return result


def find_non_regular_triangulation(
    ps: PointSet, cap: Optional[int] = None
) -> Optional[Triangulation]:
    """The first non-regular full triangulation in flip order, or None if all are.

    A non-regular triangulation of any subset of ps forces one on ps itself, so a
    None here also clears every subset.
    """
    if cap is not None and ps.n > cap:
        logger.error(f"non-regular search refused: n={ps.n} exceeds cap {cap}")
        raise CapExceeded(ps.n, cap)
    closure = iter_closure(seed_full_triangulation(ps), edge_flip_rule)
    for visited, t in enumerate(closure, start=1):
        if not is_regular_triangulation(t):
            logger.debug(f"non-regular triangulation after {visited} visited")
            return t
    return None


def regularity_notions_agree(t: Triangulation) -> bool:
    return bool(is_regular_triangulation(t)) == bool(
        is_regular_subdivision(Subdivision.of(t))
    )


# ---------------------------------------------------------------------------
# Delaunay
# ---------------------------------------------------------------------------


def delaunay_triangulation(ps: PointSet) -> Triangulation:
    """Lawson flips from the seed triangulation until every edge is locally Delaunay."""
    lift = paraboloid_heights(ps)
    t = seed_full_triangulation(ps)
    flips = 0
    while True:
        illegal = [e for e in sorted(t.inner_edges) if lift.value(fold_form(t, e)) < 0]
        if not illegal:
            break
        t = t.edge_flip(illegal[0])
        flips += 1
    logger.debug(f"Delaunay triangulation of {ps.n} points after {flips} flips")
    return t


__all__ = [
    "FarkasCertificate",
    "RegularityResult",
    "delaunay_triangulation",
    "farkas_certificate",
    "farkas_from_system",
    "find_non_regular_triangulation",
    "is_regular_subdivision",
    "is_regular_triangulation",
    "regularity_notions_agree",
    "verify_lifting",
]
