"""
simplex.py
-----------------
Exact two-phase tableau simplex over Fractions with Bland's rule.

The program max cᵀx s.t. Ax <= b, x >= 0 is put in equality form with one
slack per row. Rows with b_i < 0 are negated and get an artificial
variable; the starting basis matrix is then the identity, so the columns
of the starting basis in the current tableau read off B^-1 and the duals
follow from π = c_Bᵀ B^-1.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

from .lp_types import (
    Infeasible,
    InfeasibilityCertificate,
    LpInstance,
    Optimal,
    SolveResult,
    Unbounded,
    UnboundednessCertificate,
)

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class _Tableau:
    """Rows of B^-1 [A | S | R | b] and the current basis."""

    def __init__(self, matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
        self.m = len(matrix)
        self.n = len(matrix[0])
        self.signs = [1 if value >= 0 else -1 for value in rhs]
        flipped = [i for i, s in enumerate(self.signs) if s < 0]
        self.artificial_of = {row: self.n + self.m + k for k, row in enumerate(flipped)}
        self.width = self.n + self.m + len(flipped)
        self.rows: List[List[Fraction]] = []
        self.basis: List[int] = []
        for i in range(self.m):
            sign = self.signs[i]
            row = [sign * Fraction(v) for v in matrix[i]] + [ZERO] * (self.width - self.n)
            row[self.n + i] = Fraction(sign)
            if i in self.artificial_of:
                row[self.artificial_of[i]] = Fraction(1)
                self.basis.append(self.artificial_of[i])
            else:
                self.basis.append(self.n + i)
            row.append(sign * Fraction(rhs[i]))
            self.rows.append(row)

    def start_column(self, i: int) -> int:
        return self.artificial_of.get(i, self.n + i)

    def is_artificial(self, column: int) -> bool:
        return column >= self.n + self.m

    def pivot(self, r: int, column: int):
        pivot_row = self.rows[r]
        factor = pivot_row[column]
        self.rows[r] = pivot_row = [v / factor for v in pivot_row]
        for i, row in enumerate(self.rows):
            if i != r and row[column] != 0:
                scale = row[column]
                self.rows[i] = [a - scale * b for a, b in zip(row, pivot_row)]
        self.basis[r] = column

    def duals(self, cost: Sequence[Fraction]) -> List[Fraction]:
        """π_i = Σ_r cost[basis[r]] · (B^-1)_{r,i}."""
        return [
            sum((cost[self.basis[r]] * self.rows[r][self.start_column(i)] for r in range(self.m)), ZERO)
            for i in range(self.m)
        ]

    def reduced_cost(self, cost: Sequence[Fraction], column: int) -> Fraction:
        return cost[column] - sum(
            (cost[self.basis[r]] * self.rows[r][column] for r in range(self.m)), ZERO
        )

    def values(self) -> List[Fraction]:
        out = [ZERO] * self.width
        for r, column in enumerate(self.basis):
            out[column] = self.rows[r][-1]
        return out

    def run(self, cost: Sequence[Fraction], allow_artificial: bool) -> Optional[int]:
        """Pivot to optimality; returns the entering column of an unbounded ray, else None."""
        while True:
            entering = None
            for column in range(self.width):
                if column in self.basis or (self.is_artificial(column) and not allow_artificial):
                    continue
                if self.reduced_cost(cost, column) > 0:
                    entering = column
                    break
            if entering is None:
                return None
            leaving = None
            best = None
            for r in range(self.m):
                coefficient = self.rows[r][entering]
                if coefficient <= 0:
                    continue
                ratio = self.rows[r][-1] / coefficient
                if best is None or ratio < best or (ratio == best and self.basis[r] < self.basis[leaving]):
                    best, leaving = ratio, r
            if leaving is None:
                return entering
            self.pivot(leaving, entering)

    def drive_out_artificials(self):
        for r, column in enumerate(self.basis):
            if not self.is_artificial(column):
                continue
            for candidate in range(self.n + self.m):
                if candidate not in self.basis and self.rows[r][candidate] != 0:
                    self.pivot(r, candidate)
                    break


def _integer_scale(objective: Sequence[Fraction]) -> int:
    scale = 1
    for value in objective:
        scale = lcm(scale, Fraction(value).denominator)
    return scale


def solve_exact(
    matrix: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    objective: Sequence[Fraction],
) -> SolveResult:
    """
    Solve max objectiveᵀx s.t. matrix·x <= rhs, x >= 0 exactly.

    Args:
        matrix: m×n rational constraint matrix, row-wise
        rhs: length-m right-hand side
        objective: length-n rational objective

    Returns:
        SolveResult: Optimal(x, y, value), Infeasible(Farkas y) or
        Unbounded(feasible point, ray)
    """
    tableau = _Tableau(matrix, rhs)
    n = tableau.n

    phase_one = [ZERO] * tableau.width
    for column in tableau.artificial_of.values():
        phase_one[column] = Fraction(-1)
    tableau.run(phase_one, allow_artificial=True)
    artificial_sum = sum((v for c, v in enumerate(tableau.values()) if tableau.is_artificial(c)), ZERO)
    if artificial_sum > 0:
        pi = tableau.duals(phase_one)
        y = tuple(sign * value for sign, value in zip(tableau.signs, pi))
        logger.debug("phase one ended with artificial sum %s", artificial_sum)
        return Infeasible(InfeasibilityCertificate(y))
    tableau.drive_out_artificials()

    scale = _integer_scale(objective)
    cost = [Fraction(v) * scale for v in objective] + [ZERO] * (tableau.width - n)
    ray_column = tableau.run(cost, allow_artificial=False)
    values = tableau.values()
    point = tuple(values[:n])
    if ray_column is not None:
        direction = [ZERO] * tableau.width
        direction[ray_column] = Fraction(1)
        for r, column in enumerate(tableau.basis):
            direction[column] = -tableau.rows[r][ray_column]
        return Unbounded(UnboundednessCertificate(point, tuple(direction[:n])))

    pi = tableau.duals(cost)
    y = tuple(sign * value / scale for sign, value in zip(tableau.signs, pi))
    value = sum((Fraction(c) * x for c, x in zip(objective, point)), ZERO)
    return Optimal(point, y, value)


def solve_lp(lp: LpInstance, objective: Optional[Sequence[Fraction]] = None) -> SolveResult:
    """solve_exact on an LpInstance, optionally with a replacement objective."""
    return solve_exact(lp.A, lp.b, lp.c if objective is None else objective)
