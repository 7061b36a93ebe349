"""
size_bound.py
-----------------
Size bound L and the lexicographic objective perturbation.

L = m + n + ceil(log2 H) + ceil(log2 max|b_i|) + ceil(log2 max|c_j|), where
H = max over k <= min(m, n) of (sqrt(k) * max|a_ij|)^k bounds every square
subdeterminant. All logarithms are evaluated exactly on integers.
"""

from fractions import Fraction
from typing import List

from .lp_types import LpInstance, SizeBound


def ceil_log2(value: int) -> int:
    """ceil(log2 value) for value >= 1; 0 for value <= 1."""
    if value <= 1:
        return 0
    return (value - 1).bit_length()


def hadamard_log2(max_entry: int, size: int) -> int:
    """ceil(log2 (sqrt(k) * a)^k), computed as ceil(ceil_log2(k^k * a^(2k)) / 2)."""
    if max_entry == 0:
        return 0
    squared = size ** size * max_entry ** (2 * size)
    return -(-ceil_log2(squared) // 2)


def compute_size_bound(lp: LpInstance) -> SizeBound:
    """
    Bit-size bound of an integer LP.

    Returns:
        SizeBound: L >= m + n, epsilon = 2^(-3L-2)
    """
    max_entry = max(abs(v) for row in lp.A for v in row)
    determinant_bits = max(hadamard_log2(max_entry, k) for k in range(1, min(lp.m, lp.n) + 1))
    L = (
        lp.m
        + lp.n
        + determinant_bits
        + ceil_log2(max(abs(v) for v in lp.b))
        + ceil_log2(max(abs(v) for v in lp.c))
    )
    return SizeBound(L)


def perturb_objective(lp: LpInstance, bound: SizeBound) -> List[Fraction]:
    """c'_j = c_j + epsilon^j, j counted from 1."""
    epsilon = bound.epsilon
    return [Fraction(c) + epsilon ** (j + 1) for j, c in enumerate(lp.c)]
