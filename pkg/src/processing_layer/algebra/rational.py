"""
rational.py
-----------------
Exact rational helpers built on fractions.Fraction.

Fraction already keeps the denominator positive and the pair reduced, so
it is used directly as the BigRational carrier. This module adds the
strict text form used in transcripts ("p" or "p/q", base 10).
"""

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from ..errors import MessageFormatError

BigRational = Fraction

_RATIONAL_PATTERN = re.compile(r"^(-?\d+)(?:/(\d+))?$")

RationalLike = Union[int, Fraction]


def parse_rational(token: str) -> Fraction:
    """
    Parse a base-10 rational token.

    Args:
        token: "p" or "p/q" with q > 0, no whitespace, no decimal point

    Returns:
        Fraction: reduced value

    Raises:
        MessageFormatError: token is not a rational in canonical syntax
    """
    match = _RATIONAL_PATTERN.match(token)
    if match is None:
        raise MessageFormatError(f"not a rational: {token!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise MessageFormatError(f"zero denominator: {token!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    return str(Fraction(value))


def parse_rational_vector(text: str, length: Optional[int] = None) -> List[Fraction]:
    values = [parse_rational(token) for token in text.split()]
    if length is not None and len(values) != length:
        raise MessageFormatError(f"expected {length} rationals, got {len(values)}")
    return values


def format_rational_vector(values: Iterable[RationalLike]) -> str:
    return " ".join(format_rational(v) for v in values)


def dot(u: Sequence[RationalLike], v: Sequence[RationalLike]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(matrix: Sequence[Sequence[RationalLike]], v: Sequence[RationalLike]) -> List[Fraction]:
    return [dot(row, v) for row in matrix]


def transpose_mat_vec(matrix: Sequence[Sequence[RationalLike]], v: Sequence[RationalLike]) -> List[Fraction]:
    """Aᵀv for an m×n matrix given row-wise."""
    if len(matrix) != len(v):
        raise ValueError(f"length mismatch: {len(matrix)} rows vs {len(v)}")
    columns = len(matrix[0]) if matrix else 0
    return [dot([row[j] for row in matrix], v) for j in range(columns)]
