"""
primes.py
-----------------
Prime generation and primality testing.

primes_first sieves up to an upper bound on the k-th prime with a numpy
boolean table; is_prime is deterministic Miller-Rabin, exact for every
input below 3.3e24 (so for all 64-bit integers).
"""

import math
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..errors import ParameterError

# First twelve primes: a deterministic witness set for n < 3.3e24
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kth_prime_upper_bound(k: int) -> int:
    """Rosser's bound p_k < k(ln k + ln ln k) for k >= 6."""
    if k < 6:
        return 13
    return int(k * (math.log(k) + math.log(math.log(k)))) + 1


def sieve(limit: int) -> np.ndarray:
    """All primes <= limit, ascending."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for candidate in range(2, math.isqrt(limit) + 1):
        if flags[candidate]:
            flags[candidate * candidate :: candidate] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_first(k: int) -> List[int]:
    """
    First k primes, ascending.

    Args:
        k: number of primes, k >= 1

    Returns:
        List[int]: exactly k primes
    """
    if k < 1:
        raise ParameterError(f"primes_first needs k >= 1, got {k}")
    return list(prime_pool(k))


@lru_cache(maxsize=64)
def prime_pool(k: int) -> Tuple[int, ...]:
    """Cached tuple form of primes_first, shared by provers and verifiers."""
    primes = sieve(kth_prime_upper_bound(k))
    return tuple(int(p) for p in primes[:k])


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin primality test.

    Args:
        n: non-negative integer

    Returns:
        bool: True iff n is prime
    """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    candidate = max(n + 1, 2)
    while not is_prime(candidate):
        candidate += 1
    return candidate
