"""
composer.py
-----------------
Generic lexicographically-first composer.

Given a relation R(x, y) whose solutions split into blocks y_1..y_k, a
check for R and a (co-nondeterministic) check that no z_i < y_i extends the
prefix y_1..y_{i-1} to a solution, this builds a prover/verifier pair whose
canonical output is the lexicographically first solution.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from ..errors import ConfigurationError, MessageFormatError
from .codec import SectionReader, format_ints, parse_ints
from .outcome import ProtocolOutcome
from .protocol import NONE_TOKEN, Payload, ProtocolPair, ProverHandle, VerifierHandle
from .protocol_enums import RejectReason
from .randomness import RandomStream

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
DomainsFn = Callable[[Any], Sequence[Sequence[int]]]
ExistenceCheck = Callable[[Any, Block], bool]
# (instance, prefix, bound, certificate) -> True iff no z < bound in the next
# block extends prefix to a solution; bound None means "any z".
PrefixCheck = Callable[[Any, Block, Optional[int], str], bool]
PrefixCertifier = Callable[[Any, Block, Optional[int]], str]

SLOW_REFERENCE = "slow-reference"


def _identity(value: int) -> Any:
    return value


def _empty_certificate(instance: Any, prefix: Block, bound: Optional[int]) -> str:
    return ""


@dataclass(frozen=True)
class LexSearchSpec:
    """
    Search problem decomposed into k blocks.

    Attributes:
        tag: problem tag of the resulting protocol pair
        block_count: k >= 1
        block_domains: instance -> k sequences of admissible block values
        existence_check: R(x, y)
        prefix_nonexistence_check: see PrefixCheck
        prefix_certifier: honest certificate for a nonexistence claim
        checker_label: recorded in prover messages; verifier rejects others
        canonical_order: sort key on block values
        solver: optional fast search for the lex-first solution
    """
    tag: str
    block_count: int
    block_domains: DomainsFn
    existence_check: ExistenceCheck
    prefix_nonexistence_check: PrefixCheck
    prefix_certifier: PrefixCertifier = _empty_certificate
    checker_label: str = SLOW_REFERENCE
    canonical_order: Callable[[int], Any] = _identity
    solver: Optional[Callable[[Any], Optional[Block]]] = None

    @classmethod
    def from_relation(
        cls,
        tag: str,
        domains: Sequence[Sequence[int]],
        relation: ExistenceCheck,
    ) -> "LexSearchSpec":
        """Spec over fixed domains with brute-force nonexistence checks."""
        fixed = [tuple(d) for d in domains]

        def domains_fn(instance: Any) -> Sequence[Sequence[int]]:
            return fixed

        return cls(
            tag=tag,
            block_count=len(fixed),
            block_domains=domains_fn,
            existence_check=relation,
            prefix_nonexistence_check=brute_force_prefix_check(relation, domains_fn),
        )

    def domains_for(self, instance: Any) -> List[Tuple[int, ...]]:
        domains = [tuple(sorted(d, key=self.canonical_order)) for d in self.block_domains(instance)]
        if len(domains) != self.block_count:
            raise ConfigurationError(
                f"{self.tag}: expected {self.block_count} block domains, got {len(domains)}"
            )
        if any(not d for d in domains):
            raise ConfigurationError(f"{self.tag}: empty block domain")
        return domains


def enumerate_lex(domains: Sequence[Sequence[int]]) -> Iterator[Block]:
    """All tuples over the (already ordered) domains in lexicographic order."""
    return itertools.product(*domains)


def brute_force_prefix_check(
    relation: ExistenceCheck, domains_fn: DomainsFn, order: Callable[[int], Any] = _identity
) -> PrefixCheck:
    """Nonexistence check by exhaustive search; ignores the certificate."""

    def check(instance: Any, prefix: Block, bound: Optional[int], certificate: str) -> bool:
        domains = [tuple(sorted(d, key=order)) for d in domains_fn(instance)]
        position = len(prefix)
        heads = [z for z in domains[position] if bound is None or order(z) < order(bound)]
        for z in heads:
            for rest in enumerate_lex(domains[position + 1 :]):
                if relation(instance, prefix + (z,) + rest):
                    return False
        return True

    return check


class LexFirstProver(ProverHandle):
    """Honest prover: finds the lex-first solution and certifies every prefix."""

    def __init__(self, spec: LexSearchSpec):
        self.spec = spec
        self.problem = spec.tag

    def find_solution(self, instance: Any) -> Optional[Block]:
        if self.spec.solver is not None:
            return self.spec.solver(instance)
        for candidate in enumerate_lex(self.spec.domains_for(instance)):
            if self.spec.existence_check(instance, candidate):
                return candidate
        return None

    def first_message(self, instance: Any, rand: RandomStream) -> Payload:
        self.spec.domains_for(instance)
        solution = self.find_solution(instance)
        certify = self.spec.prefix_certifier
        if solution is None:
            return [
                ("solution", NONE_TOKEN),
                ("checker", self.spec.checker_label),
                ("prefix-cert", f"0 {certify(instance, (), None)}".strip()),
            ]
        lines: Payload = [("solution", format_ints(solution)), ("checker", self.spec.checker_label)]
        for i in range(self.spec.block_count):
            certificate = certify(instance, solution[:i], solution[i])
            lines.append(("prefix-cert", f"{i + 1} {certificate}".strip()))
        return lines


class LexFirstVerifier(VerifierHandle):
    """Checks R(x, y) and one prefix-nonexistence claim per block."""

    def __init__(self, spec: LexSearchSpec):
        self.spec = spec
        self.problem = spec.tag

    @staticmethod
    def _certificates(reader: SectionReader) -> List[Tuple[int, str]]:
        out = []
        for text in reader.repeated("prefix-cert"):
            head, _, rest = text.partition(" ")
            out.append((parse_ints(head)[0], rest.strip()))
        return out

    def decide(self, instance: Any, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        message.ensure_only({"solution", "checker", "prefix-cert"})
        spec = self.spec
        domains = spec.domains_for(instance)
        if message.single("checker") != spec.checker_label:
            return ProtocolOutcome.bot(RejectReason.UNKNOWN_CHECKER)
        certificates = self._certificates(message)

        text = message.single("solution")
        if text == NONE_TOKEN:
            if len(certificates) != 1 or certificates[0][0] != 0:
                return ProtocolOutcome.bot(RejectReason.BAD_CERTIFICATE)
            if spec.prefix_nonexistence_check(instance, (), None, certificates[0][1]):
                return ProtocolOutcome.bot(RejectReason.NO_SOLUTION, certified=True)
            return ProtocolOutcome.bot(RejectReason.BAD_CERTIFICATE)

        solution = tuple(parse_ints(text))
        if len(solution) != spec.block_count:
            raise MessageFormatError(f"expected {spec.block_count} blocks, got {len(solution)}")
        if any(value not in domain for value, domain in zip(solution, domains)):
            return ProtocolOutcome.bot(RejectReason.BAD_ENTRY)
        if not spec.existence_check(instance, solution):
            return ProtocolOutcome.bot(RejectReason.NOT_A_SOLUTION)
        if [index for index, _ in certificates] != list(range(1, spec.block_count + 1)):
            return ProtocolOutcome.bot(RejectReason.BAD_CERTIFICATE)
        for i, (_, certificate) in enumerate(certificates):
            if not spec.prefix_nonexistence_check(instance, solution[:i], solution[i], certificate):
                logger.info("%s: earlier solution below block %d", spec.tag, i + 1)
                return ProtocolOutcome.bot(RejectReason.EARLIER_SOLUTION)
        return ProtocolOutcome.canonical(format_ints(solution))


def compose_lex_first(spec: LexSearchSpec, instance: Any = None) -> ProtocolPair:
    """
    Build the lex-first prover/verifier pair for a search spec.

    Args:
        spec: block decomposition and checks
        instance: optional instance whose domains are validated up front

    Raises:
        ConfigurationError: k = 0 or an empty block domain
    """
    if spec.block_count < 1:
        raise ConfigurationError(f"{spec.tag}: block count must be >= 1")
    if instance is not None:
        spec.domains_for(instance)
    return ProtocolPair(LexFirstProver(spec), LexFirstVerifier(spec))
