"""
algebra package
-----------------------
Exact arithmetic substrate for the proof protocols

Components:
- rational.py: Fraction-based rationals and their transcript text form
- primes.py: sieve, deterministic Miller-Rabin
- convolution.py: exact integer convolution via NTT + CRT
- fields.py: F_p and F_{p^l}
- polynomials.py: dense polynomials, multipoint evaluation, interpolation
- irreducible.py: irreducibility test and sampling
"""

from .rational import BigRational, parse_rational, format_rational
from .primes import primes_first, prime_pool, is_prime, next_prime
from .convolution import exact_convolve
from .fields import PrimeField, PrimeFieldElem, ExtensionField, ExtFieldElem
from .polynomials import DensePolynomial, SubproductTree, multipoint_eval, interpolate
from .irreducible import check_irreducible, find_irreducible

__all__ = [
    'BigRational',
    'parse_rational',
    'format_rational',
    'primes_first',
    'prime_pool',
    'is_prime',
    'next_prime',
    'exact_convolve',
    'PrimeField',
    'PrimeFieldElem',
    'ExtensionField',
    'ExtFieldElem',
    'DensePolynomial',
    'SubproductTree',
    'multipoint_eval',
    'interpolate',
    'check_irreducible',
    'find_irreducible',
]
