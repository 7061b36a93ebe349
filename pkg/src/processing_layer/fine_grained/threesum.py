"""
threesum.py
-----------------
Pseudo-deterministic proof for 3-SUM.

Canonical solution: the lexicographically first index triple (i, j, k) with
a_i + b_j + c_k = 0. Nonexistence of a solution among a prefix of `a` is
certified modulo a prime p drawn from the first max(16, ceil(n^1.5)) primes:
the prover lists every triple that vanishes mod p (all of them false
positives) and the verifier recounts mod-p zero triples from residue
histograms with one exact convolution.

Message keys:
    solution  i j k (1-based) or `none`
    prime     p
    count     t
    triple    one false-positive triple per line, strictly increasing
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.convolution import exact_convolve
from ..algebra.primes import is_prime, prime_pool
from ..errors import ProverContractError, RetryExhaustedError
from ..proof_core.codec import Line, SectionReader, format_ints
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
from .instances import ThreeSumInstance

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


# ===== PARAMETERS =====

def ceil_n_three_halves(n: int) -> int:
    """ceil(n^1.5) computed exactly as ceil(sqrt(n^3))."""
    cube = n ** 3
    root = math.isqrt(cube)
    return root if root * root == cube else root + 1


def pool_size(n: int, params: ProtocolParameters = DEFAULT_PARAMETERS) -> int:
    return max(params.min_prime_pool, ceil_n_three_halves(n))


def false_positive_threshold(n: int) -> int:
    """Maximum accepted number of mod-p zero triples: max(1, ceil(n^1.5 log2(n)^2))."""
    return max(1, math.ceil(n ** 1.5 * math.log2(n) ** 2))


@dataclass(frozen=True)
class ModPNonexistenceCert:
    """Prime, count and the sorted list of mod-p zero triples (0-based)."""
    prime: int
    count: int
    triples: Tuple[Triple, ...]

    def to_lines(self) -> List[Line]:
        lines: List[Line] = [("prime", str(self.prime)), ("count", str(self.count))]
        lines.extend(("triple", format_indices(t)) for t in self.triples)
        return lines

    @classmethod
    def from_reader(cls, reader: SectionReader, n: int) -> "ModPNonexistenceCert":
        """Parse; triple indices are bounded by n, prefix bounds are checked later."""
        triples = tuple(parse_indices(text, 3, n) for text in reader.repeated("triple"))
        return cls(reader.int("prime"), reader.int("count"), triples)


# ===== MOD-P COUNTING =====

def _sorted_residues(values: np.ndarray, p: int) -> Tuple[np.ndarray, np.ndarray]:
    residues = np.mod(values, p)
    order = np.argsort(residues, kind="stable")
    return residues[order], order


def count_mod_p(a: np.ndarray, b: np.ndarray, c: np.ndarray, p: int) -> int:
    """
    Exact number of (i, j, k) with a_i + b_j + c_k ≡ 0 (mod p).

    Residue histograms of a and b are convolved exactly, folded mod p and
    paired with the histogram of c at the negated residue.
    """
    if a.size == 0 or b.size == 0 or c.size == 0:
        return 0
    h_a = np.bincount(np.mod(a, p), minlength=p)
    h_b = np.bincount(np.mod(b, p), minlength=p)
    h_c = np.bincount(np.mod(c, p), minlength=p)
    pair_sums = np.asarray(exact_convolve(h_a, h_b), dtype=np.int64)
    folded = pair_sums[:p].copy()
    folded[: pair_sums.size - p] += pair_sums[p:]
    complement = h_c[np.mod(-np.arange(p), p)]
    return int(np.dot(folded, complement))


def count_mod_p_brute(a: Sequence[int], b: Sequence[int], c: Sequence[int], p: int) -> int:
    """O(n^3) reference count."""
    sums = np.add.outer(np.add.outer(np.asarray(a), np.asarray(b)), np.asarray(c))
    return int(np.count_nonzero(np.mod(sums, p) == 0))


def mod_p_zero_triples(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, p: int, limit: int
) -> Optional[List[Triple]]:
    """
    All triples vanishing mod p in lexicographic order, or None once more
    than `limit` have been found.

    For each i, every -(a_i + b_j) mod p is looked up in the sorted residues
    of c; equal residues keep ascending index order.
    """
    sorted_c, order = _sorted_residues(c, p)
    found: List[Triple] = []
    for i in range(a.size):
        targets = np.mod(-(a[i] + b), p)
        low = np.searchsorted(sorted_c, targets, side="left")
        high = np.searchsorted(sorted_c, targets, side="right")
        counts = high - low
        total = int(counts.sum())
        if total == 0:
            continue
        if len(found) + total > limit:
            return None
        starts = np.repeat(low, counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        ks = order[starts + offsets]
        js = np.repeat(np.arange(b.size), counts)
        found.extend((i, int(j), int(k)) for j, k in zip(js, ks))
    return found


# ===== NONEXISTENCE SUB-PROTOCOL =====

def threesum_nonexistence_prove(
    instance: ThreeSumInstance,
    rand: RandomStream,
    prefix: Optional[int] = None,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
) -> ModPNonexistenceCert:
    """
    Certify that no zero triple uses a_1..a_prefix.

    Draws primes uniformly from the pool until one has at most the threshold
    of mod-p zero triples.

    Raises:
        ProverContractError: a listed triple is a true solution
        RetryExhaustedError: prime_retry_cap oversized primes in a row
    """
    a, b, c = instance.arrays
    a = a[: instance.n if prefix is None else prefix]
    pool = prime_pool(pool_size(instance.n, params))
    threshold = false_positive_threshold(instance.n)
    for attempt in range(params.prime_retry_cap):
        p = rand.choice(pool)
        triples = mod_p_zero_triples(a, b, c, p, threshold)
        if triples is None:
            logger.debug("prime %d over threshold on attempt %d", p, attempt + 1)
            continue
        for i, j, k in triples:
            if instance.a[i] + instance.b[j] + instance.c[k] == 0:
                raise ProverContractError(f"triple ({i + 1}, {j + 1}, {k + 1}) is a solution")
        return ModPNonexistenceCert(p, len(triples), tuple(triples))
    logger.warning("3-SUM prover exhausted %d prime draws (n=%d)", params.prime_retry_cap, instance.n)
    raise RetryExhaustedError(f"{params.prime_retry_cap} consecutive primes exceeded the threshold")


def threesum_nonexistence_verify(
    instance: ThreeSumInstance,
    cert: ModPNonexistenceCert,
    prefix: Optional[int] = None,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
) -> CertificateCheck:
    """
    Check a mod-p certificate that no zero triple uses a_1..a_prefix.

    Checks, in order: prime within the pool, count matches the list and
    the threshold, list strictly increasing, independent mod-p count equals
    the claim, every listed triple vanishes mod p but not over the integers.
    """
    n = instance.n
    prefix = n if prefix is None else prefix
    pool = prime_pool(pool_size(n, params))
    if not is_prime(cert.prime) or cert.prime > pool[-1]:
        return CertificateCheck.fail(RejectReason.BAD_PRIME)
    if cert.count != len(cert.triples) or cert.count > false_positive_threshold(n):
        return CertificateCheck.fail(RejectReason.BAD_COUNT)
    if not strictly_increasing(cert.triples):
        return CertificateCheck.fail(RejectReason.BAD_ORDER)
    a, b, c = instance.arrays
    if count_mod_p(a[:prefix], b, c, cert.prime) != cert.count:
        return CertificateCheck.fail(RejectReason.BAD_COUNT)
    for i, j, k in cert.triples:
        total = instance.a[i] + instance.b[j] + instance.c[k]
        if i >= prefix or total % cert.prime != 0 or total == 0:
            return CertificateCheck.fail(RejectReason.BAD_WITNESS)
    return CertificateCheck.ok()


@dataclass(frozen=True)
class PoolProfile:
    """Mod-p zero-triple count for every prime of the pool."""
    primes: Tuple[int, ...]
    counts: Tuple[int, ...]
    threshold: int

    @property
    def fraction_under_threshold(self) -> float:
        return sum(1 for c in self.counts if c <= self.threshold) / len(self.primes)


def threesum_prime_pool_profile(
    instance: ThreeSumInstance, params: ProtocolParameters = DEFAULT_PARAMETERS
) -> PoolProfile:
    a, b, c = instance.arrays
    pool = prime_pool(pool_size(instance.n, params))
    counts = tuple(count_mod_p(a, b, c, p) for p in pool)
    return PoolProfile(pool, counts, false_positive_threshold(instance.n))


# ===== SEARCH =====

def _first_match_in_row(instance: ThreeSumInstance, i: int, sorted_c, order) -> Optional[Triple]:
    _, b, _ = instance.arrays
    targets = -(instance.a[i] + b)
    low = np.searchsorted(sorted_c, targets, side="left")
    hits = np.flatnonzero(sorted_c[np.minimum(low, sorted_c.size - 1)] == targets)
    if hits.size == 0:
        return None
    j = int(hits[0])
    return (i, j, int(order[low[j]]))


def find_first_triple(instance: ThreeSumInstance) -> Optional[Triple]:
    """Lexicographically first zero triple in O(n^2 log n)."""
    _, _, c = instance.arrays
    order = np.argsort(c, kind="stable")
    sorted_c = c[order]
    for i in range(instance.n):
        found = _first_match_in_row(instance, i, sorted_c, order)
        if found is not None:
            return found
    return None


def all_zero_triples(instance: ThreeSumInstance, limit: int) -> List[Triple]:
    """Up to `limit` zero triples in lexicographic order."""
    a, b, c = instance.arrays
    out: List[Triple] = []
    for i in range(instance.n):
        hits = np.argwhere(a[i] + b[:, None] + c[None, :] == 0)
        out.extend((i, int(j), int(k)) for j, k in hits)
        if len(out) >= limit:
            return out[:limit]
    return out


def earlier_in_row(instance: ThreeSumInstance, triple: Triple) -> bool:
    """True iff some (i, j', k') with j' < j, or (i, j, k') with k' < k, sums to zero."""
    i, j, k = triple
    a, b, c = instance.arrays
    sorted_c = np.sort(c)
    targets = -(a[i] + b[:j])
    if targets.size:
        low = np.searchsorted(sorted_c, targets, side="left")
        if np.any(sorted_c[np.minimum(low, sorted_c.size - 1)] == targets):
            return True
    return bool(np.any(a[i] + b[j] + c[:k] == 0))


# ===== PROTOCOL =====

class ThreeSumProver(ProverHandle):
    problem = ProblemTag.THREESUM.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def first_message(self, instance: ThreeSumInstance, rand: RandomStream) -> Payload:
        triple = find_first_triple(instance)
        prefix = instance.n if triple is None else triple[0]
        cert = threesum_nonexistence_prove(instance, rand, prefix, self.params)
        solution = NONE_TOKEN if triple is None else format_indices(triple)
        return [("solution", solution)] + cert.to_lines()


class ThreeSumVerifier(VerifierHandle):
    problem = ProblemTag.THREESUM.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def decide(self, instance: ThreeSumInstance, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        message.ensure_only({"solution", "prime", "count", "triple"})
        n = instance.n
        triple = parse_solution_indices(message, 3, n)
        cert = ModPNonexistenceCert.from_reader(message, n)
        if triple is None:
            check = threesum_nonexistence_verify(instance, cert, n, self.params)
            if check:
                return ProtocolOutcome.bot(RejectReason.NO_SOLUTION, certified=True)
            return ProtocolOutcome.bot(check.reason)

        i, j, k = triple
        if instance.a[i] + instance.b[j] + instance.c[k] != 0:
            return ProtocolOutcome.bot(RejectReason.NOT_A_SOLUTION)
        if earlier_in_row(instance, triple):
            return ProtocolOutcome.bot(RejectReason.EARLIER_SOLUTION)
        check = threesum_nonexistence_verify(instance, cert, i, self.params)
        if not check:
            logger.info("3-SUM prefix certificate rejected: %s", check.reason.value)
            return ProtocolOutcome.bot(check.reason)
        return ProtocolOutcome.canonical(format_indices(triple))


def threesum_psd(params: ProtocolParameters = DEFAULT_PARAMETERS) -> ProtocolPair:
    return ProtocolPair(ThreeSumProver(params), ThreeSumVerifier(params))


def threesum_oracle(instance: ThreeSumInstance) -> Optional[str]:
    found = all_zero_triples(instance, 1)
    return format_indices(found[0]) if found else None


THREESUM_ENTRY = ProblemEntry(
    tag=ProblemTag.THREESUM,
    parse=ThreeSumInstance.from_reader,
    serialize=ThreeSumInstance.to_lines,
    make_pair=lambda instance, params: threesum_psd(params),
    oracle=threesum_oracle,
    alternatives=lambda instance, limit: [format_indices(t) for t in all_zero_triples(instance, limit)],
)
