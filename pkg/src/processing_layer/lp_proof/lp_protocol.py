"""
lp_protocol.py
-----------------
Pseudo-deterministic proof for linear programming.

The prover perturbs the objective to c' (c'_j = c_j + epsilon^j), which has
a unique optimum equal to the lexicographically greatest optimum of the
original program, and sends that vertex with a dual optimum of the
perturbed program. The verifier recomputes L and c' and checks primal
feasibility, dual feasibility and zero duality gap with matrix-vector and
dot products only.

Message keys:
    kind        optimal | infeasible | unbounded
    size-bound  L
    solution    x* as rationals, or `none`
    dual        y* (optimal)
    farkas      y with Aᵀy >= 0, bᵀy < 0 (infeasible)
    feasible    a feasible point (unbounded)
    ray         d >= 0 with Ad <= 0, c'ᵀd > 0 (unbounded)
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..algebra.rational import dot, format_rational_vector, mat_vec, parse_rational_vector, transpose_mat_vec
from ..errors import MessageFormatError
from ..proof_core.codec import SectionReader
from ..proof_core.outcome import ProtocolOutcome
from ..proof_core.protocol import NONE_TOKEN, Payload, ProtocolPair, ProverHandle, VerifierHandle
from ..proof_core.protocol_config import ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag, RejectReason
from ..proof_core.randomness import RandomStream
from ..proof_core.registry import ProblemEntry
from .lex_oracle import lex_greatest_oracle
from .lp_types import Infeasible, LpInstance, Optimal
from .simplex import solve_lp
from .size_bound import compute_size_bound, perturb_objective

logger = logging.getLogger(__name__)

KIND_OPTIMAL = "optimal"
KIND_INFEASIBLE = "infeasible"
KIND_UNBOUNDED = "unbounded"

MESSAGE_KEYS = {"kind", "size-bound", "solution", "dual", "farkas", "feasible", "ray"}


def lp_prover(lp: LpInstance) -> Payload:
    """
    Honest prover message.

    Solves the perturbed program exactly; on a finite optimum x* is the
    lexicographically greatest optimum of the original program.
    """
    bound = compute_size_bound(lp)
    objective = perturb_objective(lp, bound)
    result = solve_lp(lp, objective)
    head = [("size-bound", str(bound.L))]
    if isinstance(result, Optimal):
        return [("kind", KIND_OPTIMAL)] + head + [
            ("solution", format_rational_vector(result.certificate.x_star)),
            ("dual", format_rational_vector(result.certificate.y_star)),
        ]
    if isinstance(result, Infeasible):
        return [("kind", KIND_INFEASIBLE)] + head + [
            ("solution", NONE_TOKEN),
            ("farkas", format_rational_vector(result.certificate.y)),
        ]
    return [("kind", KIND_UNBOUNDED)] + head + [
        ("solution", NONE_TOKEN),
        ("feasible", format_rational_vector(result.certificate.point)),
        ("ray", format_rational_vector(result.certificate.ray)),
    ]


def _nonnegative(values: Sequence[Fraction]) -> bool:
    return all(v >= 0 for v in values)


def _primal_feasible(lp: LpInstance, x: Sequence[Fraction]) -> bool:
    return _nonnegative(x) and all(lhs <= b for lhs, b in zip(mat_vec(lp.A, x), lp.b))


def _check_optimal(lp: LpInstance, objective: List[Fraction], reader: SectionReader) -> ProtocolOutcome:
    reader.ensure_only({"kind", "size-bound", "solution", "dual"})
    x = parse_rational_vector(reader.single("solution"), lp.n)
    y = parse_rational_vector(reader.single("dual"), lp.m)
    if not _primal_feasible(lp, x):
        return ProtocolOutcome.bot(RejectReason.PRIMAL_INFEASIBLE)
    if not _nonnegative(y) or any(a < c for a, c in zip(transpose_mat_vec(lp.A, y), objective)):
        return ProtocolOutcome.bot(RejectReason.DUAL_INFEASIBLE)
    if dot(objective, x) != dot(lp.b, y):
        return ProtocolOutcome.bot(RejectReason.DUALITY_GAP)
    return ProtocolOutcome.canonical(format_rational_vector(x))


def _check_infeasible(lp: LpInstance, reader: SectionReader) -> ProtocolOutcome:
    reader.ensure_only({"kind", "size-bound", "solution", "farkas"})
    y = parse_rational_vector(reader.single("farkas"), lp.m)
    if _nonnegative(y) and _nonnegative(transpose_mat_vec(lp.A, y)) and dot(lp.b, y) < 0:
        return ProtocolOutcome.bot(RejectReason.INFEASIBLE, certified=True)
    return ProtocolOutcome.bot(RejectReason.BAD_CERTIFICATE)


def _check_unbounded(lp: LpInstance, objective: List[Fraction], reader: SectionReader) -> ProtocolOutcome:
    reader.ensure_only({"kind", "size-bound", "solution", "feasible", "ray"})
    point = parse_rational_vector(reader.single("feasible"), lp.n)
    ray = parse_rational_vector(reader.single("ray"), lp.n)
    if (
        _primal_feasible(lp, point)
        and _nonnegative(ray)
        and all(v <= 0 for v in mat_vec(lp.A, ray))
        and dot(objective, ray) > 0
    ):
        return ProtocolOutcome.bot(RejectReason.UNBOUNDED, certified=True)
    return ProtocolOutcome.bot(RejectReason.BAD_CERTIFICATE)


def lp_verifier(lp: LpInstance, message: SectionReader) -> ProtocolOutcome:
    """
    Verify an LP prover message.

    Recomputes L and c' independently; the prover's L echo must match.
    """
    bound = compute_size_bound(lp)
    if message.int("size-bound") != bound.L:
        return ProtocolOutcome.bot(RejectReason.SIZE_BOUND)
    objective = perturb_objective(lp, bound)
    kind = message.single("kind")
    if kind == KIND_OPTIMAL:
        return _check_optimal(lp, objective, message)
    if message.single("solution") != NONE_TOKEN:
        raise MessageFormatError(f"{kind} message must carry 'solution: none'")
    if kind == KIND_INFEASIBLE:
        return _check_infeasible(lp, message)
    if kind == KIND_UNBOUNDED:
        return _check_unbounded(lp, objective, message)
    raise MessageFormatError(f"unknown LP message kind {kind!r}")


class LpProver(ProverHandle):
    problem = ProblemTag.LP.value

    def first_message(self, instance: LpInstance, rand: RandomStream) -> Payload:
        return lp_prover(instance)


class LpVerifier(VerifierHandle):
    problem = ProblemTag.LP.value

    def decide(self, instance: LpInstance, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        message.ensure_only(MESSAGE_KEYS)
        outcome = lp_verifier(instance, message)
        if outcome.is_bot and not outcome.certified:
            logger.info("lp verifier rejected: %s", outcome.reason)
        return outcome


def lp_psd(params: Optional[ProtocolParameters] = None) -> ProtocolPair:
    return ProtocolPair(LpProver(), LpVerifier())


def lp_oracle(lp: LpInstance) -> Optional[str]:
    point = lex_greatest_oracle(lp)
    return None if point is None else format_rational_vector(point)


LP_ENTRY = ProblemEntry(
    tag=ProblemTag.LP,
    parse=LpInstance.from_reader,
    serialize=LpInstance.to_lines,
    make_pair=lambda instance, params: lp_psd(params),
    oracle=lp_oracle,
    alternatives=lambda instance, limit: [],
)
