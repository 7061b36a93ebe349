"""
orthogonal_vectors.py
-----------------
Pseudo-deterministic MA proof for Orthogonal Vectors.

Vector v^j is associated with the node a_j = j in the prime subfield. With
ψ_i the interpolant of coordinate i over the nodes, the polynomial

    Q(x) = Σ_{u ∈ V} Π_i (1 - u_i ψ_i(x))

satisfies Q(a_j) = #{u ∈ V : ⟨u, v^j⟩ = 0}. The prover sends Q; the verifier
checks it at one random point of F_{p^l} against a direct O(nd)
evaluation, then reads every count off a multipoint evaluation.

Message keys:
    solution     i j (1-based, i < j) or `none`
    prime        p, the smallest prime above n^2 d
    degree       l, the smallest with p^l > 2dn · n^e
    modulus      monic irreducible of degree l over F_p, ascending
    coefficient  one F_{p^l} element per coefficient of Q, ascending degree
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.fields import ExtensionField, ExtFieldElem, PrimeField
from ..algebra.irreducible import check_irreducible, find_irreducible
from ..algebra.polynomials import DensePolynomial, interpolate, multipoint_eval
from ..algebra.primes import next_prime
from ..errors import MessageFormatError, ParameterError
from ..proof_core.codec import Line, SectionReader, format_ints, parse_ints
from ..proof_core.outcome import ProtocolOutcome
from ..proof_core.protocol import (
    NONE_TOKEN,
    Payload,
    ProtocolPair,
    ProverHandle,
    VerifierHandle,
    format_indices,
    parse_solution_indices,
)
from ..proof_core.protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag, RejectReason, Role
from ..proof_core.randomness import RandomStream
from ..proof_core.registry import ProblemEntry
from .instances import OvInstance

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class OvFieldParameters:
    p: int
    degree: int

    @property
    def order(self) -> int:
        return self.p ** self.degree


def ov_field_parameters(n: int, d: int, params: ProtocolParameters = DEFAULT_PARAMETERS) -> OvFieldParameters:
    """p > n^2 d prime; l smallest with p^l > 2dn / ε for ε = n^-e."""
    p = next_prime(n * n * d)
    target = 2 * d * n * n ** params.ov_error_exponent
    degree, order = 1, p
    while order <= target:
        degree += 1
        order *= p
    return OvFieldParameters(p, degree)


def polynomial_degree_bound(instance: OvInstance) -> int:
    """deg Q <= d(n - 1)."""
    return instance.d * (instance.n - 1)


def self_terms(instance: OvInstance) -> List[int]:
    """1 where v^j is orthogonal to itself (the zero vector)."""
    return [int(not any(v)) for v in instance.vectors]


# ===== POLYNOMIAL CONSTRUCTION =====

def barycentric_weights(n: int, p: int) -> np.ndarray:
    """w_j = 1 / Π_{k≠j} (j - k) for nodes 1..n, as residues mod p."""
    factorials = [1] * (n + 1)
    for k in range(1, n + 1):
        factorials[k] = factorials[k - 1] * k % p
    weights = []
    for j in range(1, n + 1):
        denominator = factorials[j - 1] * factorials[n - j] % p
        if (n - j) % 2:
            denominator = (-denominator) % p
        weights.append(pow(denominator, -1, p))
    return np.asarray(weights, dtype=np.int64)


def _lagrange_row(x: int, n: int, p: int, weights: np.ndarray) -> np.ndarray:
    """L_j(x) mod p for every node j, x an integer point."""
    if 1 <= x <= n:
        row = np.zeros(n, dtype=np.int64)
        row[x - 1] = 1
        return row
    diffs = [(x - j) % p for j in range(1, n + 1)]
    ell = 1
    for value in diffs:
        ell = ell * value % p
    inverses = np.asarray([pow(v, -1, p) for v in diffs], dtype=np.int64)
    return ell * weights % p * inverses % p


def _q_value(psi: np.ndarray, matrix: np.ndarray, p: int) -> int:
    terms = np.where(matrix == 1, np.mod(1 - psi, p)[None, :], 1)
    acc = np.ones(matrix.shape[0], dtype=np.int64)
    for column in range(matrix.shape[1]):
        acc = acc * terms[:, column] % p
    return int(acc.sum() % p)


def q_over_prime_field(instance: OvInstance, p: int) -> DensePolynomial:
    """Q over F_p from its values at the d(n-1)+1 points 0..d(n-1)."""
    n, matrix = instance.n, instance.matrix
    if p <= n * n * instance.d:
        raise ParameterError(f"prime {p} must exceed n^2 d = {n * n * instance.d}")
    weights = barycentric_weights(n, p)
    points = []
    for x in range(polynomial_degree_bound(instance) + 1):
        psi = _lagrange_row(x, n, p, weights) @ matrix % p
        points.append((x, _q_value(psi, matrix, p)))
    return interpolate(points, PrimeField(p))


def ov_build_polynomial(instance: OvInstance, field: ExtensionField) -> DensePolynomial:
    """Q with coefficients lifted into the extension field."""
    base = q_over_prime_field(instance, field.p)
    return DensePolynomial(field, [field.from_int(c.value) for c in base.coeffs])


def direct_evaluation(instance: OvInstance, field: ExtensionField, r: ExtFieldElem) -> ExtFieldElem:
    """Σ_u Π_i (1 - u_i ψ_i(r)) with ψ_i(r) from shared barycentric weights."""
    n, d = instance.n, instance.d
    node = r.prime_subfield_value()
    if node is not None and 1 <= node <= n:
        psi = [field.from_int(v) for v in instance.vectors[node - 1]]
    else:
        weights = barycentric_weights(n, field.p)
        diffs = [r - j for j in range(1, n + 1)]
        ell = field.one()
        for value in diffs:
            ell = ell * value
        basis = [ell * int(w) / value for w, value in zip(weights, diffs)]
        psi = [field.zero() for _ in range(d)]
        for vector, weight in zip(instance.vectors, basis):
            for i, bit in enumerate(vector):
                if bit:
                    psi[i] = psi[i] + weight
    one_minus = [field.one() - value for value in psi]
    total = field.zero()
    for vector in instance.vectors:
        term = field.one()
        for i, bit in enumerate(vector):
            if bit:
                term = term * one_minus[i]
        total = total + term
    return total


# ===== COUNT CERTIFICATION =====

def find_first_pair(instance: OvInstance) -> Optional[Pair]:
    products = instance.matrix @ instance.matrix.T
    rows, cols = np.nonzero(np.triu(products == 0, k=1))
    if rows.size == 0:
        return None
    return int(rows[0]), int(cols[0])


def ov_count_message(instance: OvInstance, rand: RandomStream, params: ProtocolParameters = DEFAULT_PARAMETERS) -> List[Line]:
    """Honest field parameters, modulus and coefficients of Q."""
    field_params = ov_field_parameters(instance.n, instance.d, params)
    modulus = find_irreducible(field_params.p, field_params.degree, rand)
    field = ExtensionField(field_params.p, modulus, check=False)
    q = ov_build_polynomial(instance, field)
    lines: List[Line] = [
        ("prime", str(field_params.p)),
        ("degree", str(field_params.degree)),
        ("modulus", format_ints(modulus)),
    ]
    lines.extend(("coefficient", c.encode()) for c in q.coeffs)
    return lines


def _decode_counts(
    instance: OvInstance, message: SectionReader, rand: RandomStream, params: ProtocolParameters
) -> Tuple[Optional[List[int]], Optional[RejectReason]]:
    expected = ov_field_parameters(instance.n, instance.d, params)
    if message.int("prime") != expected.p:
        return None, RejectReason.BAD_PRIME
    if message.int("degree") != expected.degree:
        return None, RejectReason.BAD_CERTIFICATE
    modulus = parse_ints(message.single("modulus"))
    if len(modulus) != expected.degree + 1 or modulus[-1] != 1 or any(not 0 <= c < expected.p for c in modulus):
        raise MessageFormatError("modulus must be monic of degree l with coefficients in [0, p)")
    if not check_irreducible(modulus, expected.p):
        return None, RejectReason.IRREDUCIBILITY
    field = ExtensionField(expected.p, tuple(modulus), check=False)

    rows = message.repeated("coefficient")
    if len(rows) > polynomial_degree_bound(instance) + 1:
        return None, RejectReason.BAD_CERTIFICATE
    q = DensePolynomial(field, [field.decode(text) for text in rows])

    r = field.random_element(rand)
    if q.evaluate(r) != direct_evaluation(instance, field, r):
        logger.info("OV identity check failed at a random point")
        return None, RejectReason.POLYNOMIAL_IDENTITY

    counts = []
    for value in multipoint_eval(q, [field.from_int(j) for j in range(1, instance.n + 1)]):
        count = value.prime_subfield_value()
        if count is None or count > instance.n:
            return None, RejectReason.BAD_COUNT
        counts.append(count)
    return counts, None


def ov_certify_counts(
    instance: OvInstance,
    prover_seed: int = 0,
    verifier_seed: int = 1,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
) -> Optional[List[int]]:
    """
    Certified orthogonality counts: entry j is #{u ∈ V : ⟨u, v^j⟩ = 0}.

    Runs the honest count message through the MA check; None on rejection.
    """
    lines = ov_count_message(instance, RandomStream(prover_seed, Role.PROVER), params)
    counts, reason = _decode_counts(
        instance, SectionReader(lines), RandomStream(verifier_seed, Role.VERIFIER), params
    )
    if reason is not None:
        logger.warning("OV count certification rejected: %s", reason.value)
    return counts


# ===== PROTOCOL =====

class OvProver(ProverHandle):
    problem = ProblemTag.OV.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def first_message(self, instance: OvInstance, rand: RandomStream) -> Payload:
        pair = find_first_pair(instance)
        solution = NONE_TOKEN if pair is None else format_indices(pair)
        return [("solution", solution)] + ov_count_message(instance, rand, self.params)


class OvVerifier(VerifierHandle):
    problem = ProblemTag.OV.value

    def __init__(self, params: ProtocolParameters = DEFAULT_PARAMETERS):
        self.params = params

    def decide(self, instance: OvInstance, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        message.ensure_only({"solution", "prime", "degree", "modulus", "coefficient"})
        pair = parse_solution_indices(message, 2, instance.n)
        counts, reason = _decode_counts(instance, message, rand, self.params)
        if counts is None:
            return ProtocolOutcome.bot(reason)
        own = self_terms(instance)

        if pair is None:
            if any(c - s for c, s in zip(counts, own)):
                return ProtocolOutcome.bot(RejectReason.BAD_COUNT)
            return ProtocolOutcome.bot(RejectReason.NO_SOLUTION, certified=True)

        first, second = pair
        if first >= second or instance.inner(first, second) != 0:
            return ProtocolOutcome.bot(RejectReason.NOT_A_SOLUTION)
        if any(counts[j] - own[j] for j in range(first)):
            return ProtocolOutcome.bot(RejectReason.EARLIER_SOLUTION)
        if any(instance.inner(first, k) == 0 for k in range(first + 1, second)):
            return ProtocolOutcome.bot(RejectReason.EARLIER_SOLUTION)
        return ProtocolOutcome.canonical(format_indices(pair))


def ov_psd(params: ProtocolParameters = DEFAULT_PARAMETERS) -> ProtocolPair:
    return ProtocolPair(OvProver(params), OvVerifier(params))


def orthogonal_pairs(instance: OvInstance, limit: int) -> List[Pair]:
    found = [(i, j) for i, j in combinations(range(instance.n), 2) if instance.inner(i, j) == 0]
    return found[:limit]


def ov_oracle(instance: OvInstance) -> Optional[str]:
    found = orthogonal_pairs(instance, 1)
    return format_indices(found[0]) if found else None


def orthogonality_counts(vectors: Sequence[Sequence[int]]) -> List[int]:
    """Direct O(n^2 d) counts, including the self-pair."""
    return [sum(1 for u in vectors if not any(x * y for x, y in zip(u, v))) for v in vectors]


OV_ENTRY = ProblemEntry(
    tag=ProblemTag.OV,
    parse=OvInstance.from_reader,
    serialize=OvInstance.to_lines,
    make_pair=lambda instance, params: ov_psd(params),
    oracle=ov_oracle,
    alternatives=lambda instance, limit: [format_indices(p) for p in orthogonal_pairs(instance, limit)],
)
