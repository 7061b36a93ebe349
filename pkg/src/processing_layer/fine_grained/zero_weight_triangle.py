"""
zero_weight_triangle.py
-----------------
Pseudo-deterministic proof for Zero-Weight Triangle.

Canonical solution: the lexicographically first triangle i < j < k with
e(i,j) + e(i,k) + e(j,k) = 0. The prover certifies, modulo a prime from
the same pool as 3-SUM, that no zero triangle has its smallest vertex
before i (the tripartite copy with first-layer vertices restricted to
< i). The verifier recounts mod-p zero triangles itself and brute-forces
the pairs (j', k') that precede (j, k) for the fixed i.

Message keys:
    solution  i j k (1-based) or `none`
    prime     p
    count     t
    triangle  one false-positive triangle per line, strictly increasing
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from ..algebra.primes import is_prime, prime_pool
from ..errors import ProverContractError, RetryExhaustedError
from ..proof_core.codec import Line, SectionReader
from ..proof_core.outcome import ProtocolOutcome
from ..proof_core.protocol import (
    NONE_TOKEN,
    CertificateCheck,
    Payload,
    ProtocolPair,
    ProverHandle,
    VerifierHandle,
    format_indices,
    parse_indices,
    parse_solution_indices,
    strictly_increasing,
)
from ..proof_core.protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag, RejectReason
from ..proof_core.randomness import RandomStream
from ..proof_core.registry import ProblemEntry
from .instances import ZwtInstance
from .threesum import pool_size

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]


def triangle_threshold(instance: ZwtInstance, pool: int) -> int:
    """ceil(2 · C(n,3) · ceil(log2(3W + 1)) / pool)."""
    bits = math.ceil(math.log2(3 * instance.max_weight + 1))
    return -(-2 * math.comb(instance.n, 3) * bits // pool)


@dataclass(frozen=True)
class TriangleCert:
    prime: int
    count: int
    triangles: Tuple[Triangle, ...]

    def to_lines(self) -> List[Line]:
        lines: List[Line] = [("prime", str(self.prime)), ("count", str(self.count))]
        lines.extend(("triangle", format_indices(t)) for t in self.triangles)
        return lines

    @classmethod
    def from_reader(cls, reader: SectionReader, n: int) -> "TriangleCert":
        triangles = tuple(parse_indices(text, 3, n) for text in reader.repeated("triangle"))
        return cls(reader.int("prime"), reader.int("count"), triangles)


# ===== COUNTING =====

def _residue_blocks(instance: ZwtInstance, p: int, i: int) -> np.ndarray:
    """Residues of e(i,j) + e(i,k) + e(j,k) for i < j, k (rows j, columns k)."""
    residues = np.mod(instance.matrix, p)
    head = residues[i, i + 1:]
    return np.mod(head[:, None] + head[None, :] + residues[i + 1:, i + 1:], p)


def zwt_count_mod_p(instance: ZwtInstance, p: int, bound: Optional[int] = None) -> int:
    """
    Exact number of triangles i < j < k with weight ≡ 0 (mod p) and i < bound.

    For every smallest vertex i, one residue table over the pairs j < k.
    """
    bound = instance.n if bound is None else bound
    total = 0
    for i in range(min(bound, instance.n)):
        block = _residue_blocks(instance, p, i)
        total += int(np.count_nonzero(np.triu(block == 0, k=1)))
    return total


def zwt_count_mod_p_brute(instance: ZwtInstance, p: int) -> int:
    return sum(1 for i, j, k in combinations(range(instance.n), 3) if instance.weight(i, j, k) % p == 0)


def mod_p_zero_triangles(instance: ZwtInstance, p: int, bound: int, limit: int) -> Optional[List[Triangle]]:
    found: List[Triangle] = []
    for i in range(bound):
        block = _residue_blocks(instance, p, i)
        hits = np.argwhere(np.triu(block == 0, k=1))
        if len(found) + len(hits) > limit:
            return None
        found.extend((i, i + 1 + int(j), i + 1 + int(k)) for j, k in hits)
    return found


# ===== NONEXISTENCE CERTIFICATE =====

def zwt_nonexistence_prove(
    instance: ZwtInstance,
    rand: RandomStream,
    bound: int,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
) -> TriangleCert:
    """
    Certify that no zero triangle has smallest vertex < bound.

    Raises:
        ProverContractError: a listed triangle has weight exactly 0
        RetryExhaustedError: prime_retry_cap oversized primes in a row
    """
    pool = prime_pool(pool_size(instance.n, params))
    threshold = triangle_threshold(instance, len(pool))
    for _ in range(params.prime_retry_cap):
        p = rand.choice(pool)
        triangles = mod_p_zero_triangles(instance, p, bound, threshold)
        if triangles is None:
            continue
        for triangle in triangles:
            if instance.weight(*triangle) == 0:
                raise ProverContractError(f"triangle {format_indices(triangle)} has zero weight")
        return TriangleCert(p, len(triangles), tuple(triangles))
    logger.warning("ZWT prover exhausted %d prime draws (n=%d)", params.prime_retry_cap, instance.n)
    raise RetryExhaustedError(f"{params.prime_retry_cap} consecutive primes exceeded the threshold")


def zwt_nonexistence_verify(
    instance: ZwtInstance,
    cert: TriangleCert,
    bound: int,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
) -> CertificateCheck:
    pool = prime_pool(pool_size(instance.n, params))
    if not is_prime(cert.prime) or cert.prime > pool[-1]:
        return CertificateCheck.fail(RejectReason.BAD_PRIME)
    if cert.count != len(cert.triangles) or cert.count > triangle_threshold(instance, len(pool)):
        return CertificateCheck.fail(RejectReason.BAD_COUNT)
    if not strictly_increasing(cert.triangles):
        return CertificateCheck.fail(RejectReason.BAD_ORDER)
    if zwt_count_mod_p(instance, cert.prime, bound) != cert.count:
        return CertificateCheck.fail(RejectReason.BAD_COUNT)
    for i, j, k in cert.triangles:
        weight = instance.weight(i, j, k)
        if not (i < j < k and i < bound) or weight % cert.prime != 0 or weight == 0:
            return CertificateCheck.fail(RejectReason.BAD_WITNESS)
    return CertificateCheck.ok()


# ===== SEARCH =====

def zero_triangles(instance: ZwtInstance, limit: int) -> List[Triangle]:
    """Up to `limit` zero triangles in lexicographic order."""
    found: List[Triangle] = []
    matrix = instance.matrix
    for i in range(instance.n):
        head = matrix[i, i + 1:]
        block = head[:, None] + head[None, :] + matrix[i + 1:, i + 1:]
        for j, k in np.argwhere(np.triu(block == 0, k=1)):
            found.append((i, i + 1 + int(j), i + 1 + int(k)))
            if len(found) >= limit:
                return found
    return found


def earlier_pair_for_vertex(instance: ZwtInstance, triangle: Triangle) -> bool:
    """True iff some (i, j', k') with (j', k') < (j, k) has weight 0."""
    i, j, k = triangle
    for j_prime in range(i + 1, j + 1):
        stop = k if j_prime == j else instance.n
        for k_prime in range(j_prime + 1, stop):
            if instance.weight(i, j_prime, k_prime) == 0:
                return True
    return False


# ===== PROTOCOL =====

class ZwtProver(ProverHandle):
    problem = ProblemTag.ZWT.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def first_message(self, instance: ZwtInstance, rand: RandomStream) -> Payload:
        found = zero_triangles(instance, 1)
        triangle = found[0] if found else None
        bound = instance.n if triangle is None else triangle[0]
        cert = zwt_nonexistence_prove(instance, rand, bound, self.params)
        solution = NONE_TOKEN if triangle is None else format_indices(triangle)
        return [("solution", solution)] + cert.to_lines()


class ZwtVerifier(VerifierHandle):
    problem = ProblemTag.ZWT.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def decide(self, instance: ZwtInstance, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        message.ensure_only({"solution", "prime", "count", "triangle"})
        triangle = parse_solution_indices(message, 3, instance.n)
        cert = TriangleCert.from_reader(message, instance.n)
        if triangle is None:
            check = zwt_nonexistence_verify(instance, cert, instance.n, self.params)
            if check:
                return ProtocolOutcome.bot(RejectReason.NO_SOLUTION, certified=True)
            return ProtocolOutcome.bot(check.reason)

        i, j, k = triangle
        if not i < j < k or instance.weight(i, j, k) != 0:
            return ProtocolOutcome.bot(RejectReason.NOT_A_SOLUTION)
        if earlier_pair_for_vertex(instance, triangle):
            return ProtocolOutcome.bot(RejectReason.EARLIER_SOLUTION)
        check = zwt_nonexistence_verify(instance, cert, i, self.params)
        if not check:
            logger.info("ZWT prefix certificate rejected: %s", check.reason.value)
            return ProtocolOutcome.bot(check.reason)
        return ProtocolOutcome.canonical(format_indices(triangle))


def zwt_psd(params: ProtocolParameters = DEFAULT_PARAMETERS) -> ProtocolPair:
    return ProtocolPair(ZwtProver(params), ZwtVerifier(params))


def zwt_oracle(instance: ZwtInstance) -> Optional[str]:
    for triangle in combinations(range(instance.n), 3):
        if instance.weight(*triangle) == 0:
            return format_indices(triangle)
    return None


ZWT_ENTRY = ProblemEntry(
    tag=ProblemTag.ZWT,
    parse=ZwtInstance.from_reader,
    serialize=ZwtInstance.to_lines,
    make_pair=lambda instance, params: zwt_psd(params),
    oracle=zwt_oracle,
    alternatives=lambda instance, limit: [format_indices(t) for t in zero_triangles(instance, limit)],
)
