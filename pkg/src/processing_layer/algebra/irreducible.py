"""
irreducible.py
-----------------
Irreducibility testing and sampling of monic polynomials over F_p.
Polynomials are ascending integer coefficient sequences.
"""

import logging
from typing import Sequence, Tuple

import sympy.polys.galoistools as gf
from sympy.polys.domains import ZZ

from ..errors import ParameterError
from .fields import IntegerSource, _to_desc

logger = logging.getLogger(__name__)


def check_irreducible(f: Sequence[int], p: int) -> bool:
    """
    Test a monic polynomial over F_p for irreducibility.

    f of degree l is irreducible iff gcd(f, x^{p^i} - x) = 1 for every
    i <= l/2 and x^{p^l} = x modulo f.

    Args:
        f: ascending coefficients, leading coefficient 1
        p: prime

    Returns:
        bool: True iff f is irreducible

    Raises:
        ParameterError: f is not monic or has degree < 1
    """
    coefficients = [int(c) % p for c in f]
    if len(coefficients) < 2:
        raise ParameterError("irreducibility needs degree >= 1")
    if coefficients[-1] != 1:
        raise ParameterError("irreducibility test needs a monic polynomial")

    degree = len(coefficients) - 1
    modulus = _to_desc(coefficients)
    x = [ZZ(1), ZZ(0)]

    power = gf.gf_rem(x, modulus, p, ZZ)
    for _ in range(1, degree // 2 + 1):
        power = gf.gf_pow_mod(power, p, modulus, p, ZZ)
        common = gf.gf_gcd(gf.gf_sub(power, x, p, ZZ), modulus, p, ZZ)
        if common != [1]:
            return False

    for _ in range(degree // 2 + 1, degree + 1):
        power = gf.gf_pow_mod(power, p, modulus, p, ZZ)
    return not gf.gf_rem(gf.gf_sub(power, x, p, ZZ), modulus, p, ZZ)


def find_irreducible(p: int, degree: int, source: IntegerSource) -> Tuple[int, ...]:
    """
    Sample monic degree-l polynomials until one is irreducible.

    Roughly one in l candidates qualifies, so the expected number of
    draws is O(l).

    Args:
        p: prime
        degree: l >= 1
        source: caller's random stream

    Returns:
        Tuple[int, ...]: ascending coefficients, last entry 1
    """
    if degree < 1:
        raise ParameterError(f"irreducible degree must be >= 1, got {degree}")
    tries = 0
    while True:
        tries += 1
        candidate = tuple(source.randbelow(p) for _ in range(degree)) + (1,)
        if check_irreducible(candidate, p):
            logger.debug("irreducible of degree %d over F_%d after %d tries", degree, p, tries)
            return candidate
