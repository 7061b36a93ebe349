"""
convolution.py
-----------------
Exact integer convolution through number-theoretic transforms.

Each transform runs over a word-size prime below 2^31, so butterfly
products stay below 2^62 and fit numpy int64. The fewest primes whose
product exceeds the exact coefficient bound are used and the residues are
recombined with Garner's form of the Chinese Remainder Theorem.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import ConvolutionOverflowError

logger = logging.getLogger(__name__)

# (prime, primitive root, 2-adic order of prime - 1)
NTT_PRIMES: Tuple[Tuple[int, int, int], ...] = (
    (167772161, 3, 25),
    (469762049, 3, 26),
    (2013265921, 31, 27),
)


def _bit_reverse_permutation(size: int) -> np.ndarray:
    bits = size.bit_length() - 1
    index = np.arange(size, dtype=np.int64)
    reversed_index = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        reversed_index |= ((index >> b) & 1) << (bits - 1 - b)
    return reversed_index


def _powers(base: int, count: int, prime: int) -> np.ndarray:
    out = np.empty(count, dtype=np.int64)
    value = 1
    for i in range(count):
        out[i] = value
        value = value * base % prime
    return out


def ntt(values: np.ndarray, prime: int, root: int, invert: bool = False) -> np.ndarray:
    """
    Iterative radix-2 transform over F_prime.

    Args:
        values: int64 residues, length a power of two
        prime: NTT-friendly prime
        root: primitive root of prime
        invert: compute the inverse transform (scaled by 1/len)

    Returns:
        np.ndarray: transformed residues
    """
    size = values.shape[0]
    a = values[_bit_reverse_permutation(size)] % prime
    length = 2
    while length <= size:
        half = length // 2
        w_len = pow(root, (prime - 1) // length, prime)
        if invert:
            w_len = pow(w_len, prime - 2, prime)
        twiddles = _powers(w_len, half, prime)
        blocks = a.reshape(-1, length)
        even = blocks[:, :half].copy()
        odd = blocks[:, half:] * twiddles % prime
        blocks[:, :half] = (even + odd) % prime
        blocks[:, half:] = (even - odd) % prime
        a = blocks.reshape(-1)
        length *= 2
    if invert:
        a = a * pow(size, prime - 2, prime) % prime
    return a


def _convolve_mod(u: np.ndarray, v: np.ndarray, size: int, prime: int, root: int) -> np.ndarray:
    fu = np.zeros(size, dtype=np.int64)
    fv = np.zeros(size, dtype=np.int64)
    fu[: u.shape[0]] = u % prime
    fv[: v.shape[0]] = v % prime
    product = ntt(fu, prime, root) * ntt(fv, prime, root) % prime
    return ntt(product, prime, root, invert=True)


def coefficient_bound(u: np.ndarray, v: np.ndarray) -> int:
    """Upper bound on every entry of u * v for non-negative inputs."""
    if u.size == 0 or v.size == 0:
        return 0
    return min(int(u.sum()) * int(v.max()), int(v.sum()) * int(u.max()))


def select_primes(bound: int, size: int) -> List[Tuple[int, int, int]]:
    """Fewest table primes supporting the length whose product exceeds bound."""
    chosen = []
    modulus = 1
    for prime, root, order in NTT_PRIMES:
        if size > (1 << order):
            continue
        chosen.append((prime, root, order))
        modulus *= prime
        if modulus > bound:
            return chosen
    raise ConvolutionOverflowError(
        f"NTT primes cannot cover bound {bound} at transform length {size}"
    )


def _garner(residues: List[np.ndarray], primes: List[int]) -> np.ndarray:
    if len(primes) == 1:
        return residues[0]
    total_modulus = 1
    for p in primes:
        total_modulus *= p
    dtype = np.int64 if total_modulus < (1 << 62) else object
    result = residues[0].astype(dtype)
    modulus = primes[0]
    for residue, prime in zip(residues[1:], primes[1:]):
        inverse = pow(modulus % prime, prime - 2, prime)
        if dtype is object:
            current = np.array([int(x) % prime for x in result], dtype=object)
            step = (residue.astype(object) - current) % prime * inverse % prime
        else:
            step = (residue - result % prime) % prime * inverse % prime
        result = result + step.astype(dtype) * modulus
        modulus *= prime
    return result


def exact_convolve(u: Sequence[int], v: Sequence[int]) -> np.ndarray:
    """
    Exact convolution of two non-negative integer vectors.

    Args:
        u: non-negative integers
        v: non-negative integers

    Returns:
        np.ndarray: length len(u) + len(v) - 1; int64 when the bound allows,
        otherwise an object array of Python ints

    Raises:
        ValueError: empty or negative input
        ConvolutionOverflowError: bound exceeds the recombined modulus
    """
    left = np.asarray(u, dtype=np.int64)
    right = np.asarray(v, dtype=np.int64)
    if left.size == 0 or right.size == 0:
        raise ValueError("exact_convolve needs non-empty vectors")
    if (left < 0).any() or (right < 0).any():
        raise ValueError("exact_convolve needs non-negative entries")

    out_length = left.size + right.size - 1
    size = 1
    while size < out_length:
        size *= 2

    bound = coefficient_bound(left, right)
    primes = select_primes(bound, size)
    logger.debug("convolve length=%d bound=%d primes=%d", out_length, bound, len(primes))

    residues = [_convolve_mod(left, right, size, p, g) for p, g, _ in primes]
    return _garner(residues, [p for p, _, _ in primes])[:out_length]
