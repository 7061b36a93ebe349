"""
hitting_set.py
-----------------
Pseudo-deterministic proof for Hitting Set.

Canonical solution: the first index s such that S_s intersects every T.
Existence is witnessed by one element of S_s ∩ T per target set;
nonexistence for an earlier s' by the index of one target set disjoint
from S_s'. Both checks run in time linear in m = Σ|S| + Σ|T| up to a log.

Message keys:
    solution  s (1-based) or `none`
    hit       u_1 .. u_|T|, one element per target set (with a solution)
    miss      one 1-based target index per earlier candidate set
"""

import bisect
import logging
from typing import List, Optional, Sequence, Tuple

from ..errors import ProverContractError
from ..proof_core.codec import SectionReader, format_ints, parse_ints
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
)
from ..proof_core.protocol_config import ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag, RejectReason
from ..proof_core.randomness import RandomStream
from ..proof_core.registry import ProblemEntry
from .instances import HittingSetInstance

logger = logging.getLogger(__name__)


def _contains(sorted_values: Sequence[int], value: int) -> bool:
    position = bisect.bisect_left(sorted_values, value)
    return position < len(sorted_values) and sorted_values[position] == value


def sorted_disjoint(left: Sequence[int], right: Sequence[int]) -> bool:
    """Merge scan over two sorted lists."""
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            return False
        if left[i] < right[j]:
            i += 1
        else:
            j += 1
    return True


def hits_all(instance: HittingSetInstance, s: int) -> bool:
    members = instance.member_sets[s]
    return all(not members.isdisjoint(target) for target in instance.T)


def find_first_hitting_set(instance: HittingSetInstance) -> Optional[int]:
    for s in range(len(instance.S)):
        if hits_all(instance, s):
            return s
    return None


# ===== EXISTENCE =====

def hittingset_exists_prove(instance: HittingSetInstance, s: int) -> Tuple[int, ...]:
    """
    One element of S_s ∩ T for every target set T.

    Raises:
        ProverContractError: S_s misses some T
    """
    members = instance.member_sets[s]
    witness = []
    for index, target in enumerate(instance.T):
        common = next((u for u in target if u in members), None)
        if common is None:
            raise ProverContractError(f"S_{s + 1} misses T_{index + 1}")
        witness.append(common)
    return tuple(witness)


def hittingset_exists_verify(instance: HittingSetInstance, s: int, witness: Sequence[int]) -> CertificateCheck:
    if len(witness) != len(instance.T):
        return CertificateCheck.fail(RejectReason.BAD_WITNESS)
    candidate = instance.S[s]
    for u, target in zip(witness, instance.T):
        if not (_contains(candidate, u) and _contains(target, u)):
            return CertificateCheck.fail(RejectReason.BAD_WITNESS)
    return CertificateCheck.ok()


# ===== NONEXISTENCE =====

def hittingset_nonexistence_prove(instance: HittingSetInstance, bound: int) -> Tuple[int, ...]:
    """
    For every s' < bound, the first target set disjoint from S_s'.

    Raises:
        ProverContractError: some S_s' with s' < bound hits every T
    """
    misses = []
    for s in range(bound):
        members = instance.member_sets[s]
        miss = next((t for t, target in enumerate(instance.T) if members.isdisjoint(target)), None)
        if miss is None:
            raise ProverContractError(f"S_{s + 1} is a hitting set")
        misses.append(miss)
    return tuple(misses)


def hittingset_nonexistence_verify(
    instance: HittingSetInstance, bound: int, misses: Sequence[int]
) -> CertificateCheck:
    if len(misses) != bound:
        return CertificateCheck.fail(RejectReason.BAD_CERTIFICATE)
    for s, t in enumerate(misses):
        if not sorted_disjoint(instance.S[s], instance.T[t]):
            return CertificateCheck.fail(RejectReason.EARLIER_SOLUTION)
    return CertificateCheck.ok()


# ===== PROTOCOL =====

class HittingSetProver(ProverHandle):
    problem = ProblemTag.HITTING_SET.value

    def first_message(self, instance: HittingSetInstance, rand: RandomStream) -> Payload:
        s = find_first_hitting_set(instance)
        if s is None:
            misses = hittingset_nonexistence_prove(instance, len(instance.S))
            return [("solution", NONE_TOKEN), ("miss", format_indices(misses))]
        return [
            ("solution", str(s + 1)),
            ("hit", format_ints(hittingset_exists_prove(instance, s))),
            ("miss", format_indices(hittingset_nonexistence_prove(instance, s))),
        ]


class HittingSetVerifier(VerifierHandle):
    problem = ProblemTag.HITTING_SET.value

    def decide(self, instance: HittingSetInstance, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        text = message.single("solution")
        target_count = len(instance.T)
        misses_text = message.single("miss")
        miss_count = len(misses_text.split())
        misses = parse_indices(misses_text, miss_count, target_count) if miss_count else ()

        if text == NONE_TOKEN:
            message.ensure_only({"solution", "miss"})
            check = hittingset_nonexistence_verify(instance, len(instance.S), misses)
            if check:
                return ProtocolOutcome.bot(RejectReason.NO_SOLUTION, certified=True)
            return ProtocolOutcome.bot(check.reason)

        message.ensure_only({"solution", "hit", "miss"})
        (s,) = parse_indices(text, 1, len(instance.S))
        witness = parse_ints(message.single("hit"))
        check = hittingset_exists_verify(instance, s, witness)
        if not check:
            return ProtocolOutcome.bot(RejectReason.NOT_A_SOLUTION)
        check = hittingset_nonexistence_verify(instance, s, misses)
        if not check:
            logger.info("hitting set prefix rejected: %s", check.reason.value)
            return ProtocolOutcome.bot(check.reason)
        return ProtocolOutcome.canonical(str(s + 1))


def hittingset_psd(params: Optional[ProtocolParameters] = None) -> ProtocolPair:
    return ProtocolPair(HittingSetProver(), HittingSetVerifier())


def all_hitting_sets(instance: HittingSetInstance, limit: int) -> List[int]:
    found = [s for s in range(len(instance.S)) if hits_all(instance, s)]
    return found[:limit]


def hittingset_oracle(instance: HittingSetInstance) -> Optional[str]:
    for s, candidate in enumerate(instance.S):
        if all(set(candidate) & set(target) for target in instance.T):
            return str(s + 1)
    return None


HITTING_SET_ENTRY = ProblemEntry(
    tag=ProblemTag.HITTING_SET,
    parse=HittingSetInstance.from_reader,
    serialize=HittingSetInstance.to_lines,
    make_pair=lambda instance, params: hittingset_psd(params),
    oracle=hittingset_oracle,
    alternatives=lambda instance, limit: [str(s + 1) for s in all_hitting_sets(instance, limit)],
)
