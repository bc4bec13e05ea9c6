"""
Exact rational linear programming.

A dense two-phase simplex over fractions.Fraction with Bland's rule, which cannot cycle.
The programs built by the regularity checks have a few dozen variables, so a dense
tableau is plenty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from loguru import logger

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LE, GE, EQ = "<=", ">=", "=="

Coefficients = Union[Sequence, Mapping[int, object]]


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: list[Fraction] = field(default_factory=list)
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class LinearProgram:
    """maximize c.x subject to rows; variables are free unless listed in nonneg."""

    def __init__(self, num_vars: int, nonneg: Iterable[int] = ()):
        self.num_vars = num_vars
        self.nonneg = frozenset(nonneg)
        self.rows: list[tuple[list[Fraction], str, Fraction]] = []

    def _dense(self, coeffs: Coefficients) -> list[Fraction]:
        if isinstance(coeffs, Mapping):
            dense = [Fraction(0)] * self.num_vars
            for j, v in coeffs.items():
                dense[j] += Fraction(v)
            return dense
        if len(coeffs) != self.num_vars:
            raise ValueError(
                f"expected {self.num_vars} coefficients, got {len(coeffs)}"
            )
        return [Fraction(v) for v in coeffs]

    def add(self, coeffs: Coefficients, sense: str, rhs=0) -> None:
        if sense not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {sense!r}")
        self.rows.append((self._dense(coeffs), sense, Fraction(rhs)))

    def maximize(self, objective: Coefficients) -> LPResult:
        return _solve(self, self._dense(objective))


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, col: int) -> None:
    p = tab[r][col]
    tab[r] = [v / p for v in tab[r]]
    for i, row in enumerate(tab):
        f = row[col]
        if i != r and f:
            tab[i] = [a - f * b for a, b in zip(row, tab[r])]
    basis[r] = col


def _run(tab, basis, cost, allowed) -> tuple[str, int]:
    """Bland's rule: lowest improving column, lowest basic index among tied rows."""
    pivots = 0
    m = len(tab)
    while True:
        entering = None
        for j in allowed:
            reduced = cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL, pivots
        best = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or (ratio, basis[i]) < best[:2]:
                    best = (ratio, basis[i], i)
        if best is None:
            return UNBOUNDED, pivots
        _pivot(tab, basis, best[2], entering)
        pivots += 1


def _solve(lp: LinearProgram, objective: list[Fraction]) -> LPResult:
    # columns: split variables, then slacks, then artificials
    columns = []
    for j in range(lp.num_vars):
        columns.append((j, 1))
        if j not in lp.nonneg:
            columns.append((j, -1))
    n_struct = len(columns)
    n_slack = sum(1 for _, sense, _ in lp.rows if sense != EQ)
    width = n_struct + n_slack

    tab, basis, needs_artificial = [], [], []
    slack_col = n_struct
    for coeffs, sense, rhs in lp.rows:
        row = [coeffs[j] * s for j, s in columns] + [Fraction(0)] * n_slack
        if sense != EQ:
            row[slack_col] = Fraction(1 if sense == LE else -1)
        sign = -1 if rhs < 0 or (rhs == 0 and sense == GE) else 1
        row = [sign * v for v in row] + [sign * rhs]
        if sense != EQ and row[slack_col] == 1:
            basis.append(slack_col)
            needs_artificial.append(False)
        else:
            basis.append(-1)
            needs_artificial.append(True)
        if sense != EQ:
            slack_col += 1
        tab.append(row)

    n_art = sum(needs_artificial)
    total = width + n_art
    art = width
    for i, row in enumerate(tab):
        rhs = row.pop()
        row.extend([Fraction(0)] * n_art)
        if needs_artificial[i]:
            row[art] = Fraction(1)
            basis[i] = art
            art += 1
        row.append(rhs)

    pivots = 0
    if n_art:
        phase1 = [Fraction(0)] * width + [Fraction(-1)] * n_art
        _, pivots = _run(tab, basis, phase1, range(total))
        infeasibility = sum(tab[i][-1] for i in range(len(tab)) if basis[i] >= width)
        if infeasibility > 0:
            logger.debug(f"LP infeasible after {pivots} phase-one pivots")
            return LPResult(INFEASIBLE, pivots=pivots)
        # drive zero-valued artificials out of the basis, dropping redundant rows
        for i in reversed(range(len(tab))):
            if basis[i] < width:
                continue
            col = next((j for j in range(width) if tab[i][j] != 0), None)
            if col is None:
                del tab[i]
                del basis[i]
            else:
                _pivot(tab, basis, i, col)
                pivots += 1

    cost = [Fraction(0)] * total
    for k, (j, s) in enumerate(columns):
        cost[k] = objective[j] * s
    status, more = _run(tab, basis, cost, range(width))
    pivots += more
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=pivots)

    values = [Fraction(0)] * total
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    x = [Fraction(0)] * lp.num_vars
    for k, (j, s) in enumerate(columns):
        x[j] += s * values[k]
    value = sum(c * v for c, v in zip(objective, x))
    logger.debug(f"LP optimal value {value} after {pivots} pivots")
    return LPResult(OPTIMAL, value, x, pivots)


__all__ = [
    "EQ",
    "GE",
    "INFEASIBLE",
    "LE",
    "LPResult",
    "LinearProgram",
    "OPTIMAL",
    "UNBOUNDED",
]
