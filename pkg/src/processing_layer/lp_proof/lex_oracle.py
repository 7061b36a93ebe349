"""
lex_oracle.py
-----------------
Lexicographically greatest optimum by a sequence of exact LPs.

Maximize cᵀx, pin the value with two inequalities, maximize x_1, pin it,
and so on through x_n. Serves as the brute-force oracle for LP.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .lp_types import LpInstance, Optimal
from .simplex import solve_exact


def _pin(rows: List[List[Fraction]], rhs: List[Fraction], direction: Sequence[Fraction], value: Fraction):
    rows.append([Fraction(v) for v in direction])
    rhs.append(value)
    rows.append([-Fraction(v) for v in direction])
    rhs.append(-value)


def lex_greatest_oracle(lp: LpInstance) -> Optional[Tuple[Fraction, ...]]:
    """
    Lexicographically greatest optimal point of max cᵀx.

    Returns:
        tuple of Fractions, or None when the program is infeasible, unbounded,
        or its optimal face is unbounded in some coordinate
    """
    rows = [[Fraction(v) for v in row] for row in lp.A]
    rhs = [Fraction(v) for v in lp.b]
    result = solve_exact(rows, rhs, lp.c)
    if not isinstance(result, Optimal):
        return None
    _pin(rows, rhs, lp.c, result.value)

    point: List[Fraction] = []
    for j in range(lp.n):
        unit = [Fraction(int(k == j)) for k in range(lp.n)]
        result = solve_exact(rows, rhs, unit)
        if not isinstance(result, Optimal):
            return None
        point.append(result.value)
        _pin(rows, rhs, unit, result.value)
    return tuple(point)
