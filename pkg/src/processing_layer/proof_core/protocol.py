"""
protocol.py
-----------------
Prover and verifier handles plus helpers for reading prover messages.

Every protocol here is prover-first with one prover message; the verifier
may draw randomness after receiving it (MA).
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

from ..errors import MessageFormatError
from .codec import Line, SectionReader, format_ints, parse_ints
from .outcome import ProtocolOutcome
from .protocol_enums import RejectReason
from .randomness import RandomStream

logger = logging.getLogger(__name__)

Payload = List[Line]

NONE_TOKEN = "none"


class ProverHandle(ABC):
    """Honest prover for one problem tag."""

    problem: str = ""

    @abstractmethod
    def first_message(self, instance: Any, rand: RandomStream) -> Payload:
        """Build the prover's single message."""


class VerifierHandle(ABC):
    """Verifier for one problem tag."""

    problem: str = ""

    @abstractmethod
    def decide(self, instance: Any, message: SectionReader, rand: RandomStream) -> ProtocolOutcome:
        """Return Canonical or Bot; may raise MessageFormatError on bad bytes."""


class ProtocolPair(NamedTuple):
    prover: ProverHandle
    verifier: VerifierHandle


def decide_safely(
    verifier: VerifierHandle, instance: Any, lines: Sequence[Line], rand: RandomStream
) -> ProtocolOutcome:
    """Run the verifier, mapping any decoding failure on prover bytes to Bot."""
    try:
        return verifier.decide(instance, SectionReader(lines), rand)
    except (ValueError, ArithmeticError, IndexError, KeyError, TypeError) as exc:
        logger.info("%s verifier rejected malformed message: %s", verifier.problem, exc)
        return ProtocolOutcome.bot(RejectReason.MALFORMED)


# ===== INDEX TOKENS =====

def format_indices(indices: Sequence[int]) -> str:
    """0-based indices to the 1-based text form."""
    return format_ints(i + 1 for i in indices)


def parse_indices(text: str, count: int, bound: int) -> Tuple[int, ...]:
    """
    1-based text form to 0-based indices.

    Raises:
        MessageFormatError: wrong arity or an index outside [1, bound]
    """
    values = parse_ints(text)
    if len(values) != count:
        raise MessageFormatError(f"expected {count} indices, got {len(values)}")
    if any(not 1 <= v <= bound for v in values):
        raise MessageFormatError(f"index outside [1, {bound}]")
    return tuple(v - 1 for v in values)


def parse_solution_indices(reader: SectionReader, count: int, bound: int) -> Optional[Tuple[int, ...]]:
    """The `solution` line as 0-based indices, or None for `solution: none`."""
    text = reader.single("solution")
    if text == NONE_TOKEN:
        return None
    return parse_indices(text, count, bound)


def strictly_increasing(rows: Sequence[Sequence[int]]) -> bool:
    return all(tuple(a) < tuple(b) for a, b in zip(rows, rows[1:]))


class CertificateCheck(NamedTuple):
    """Result of checking one certificate; falsy when rejected."""
    accepted: bool
    reason: Optional[RejectReason] = None

    def __bool__(self) -> bool:
        return self.accepted

    @classmethod
    def ok(cls) -> "CertificateCheck":
        return cls(True)

    @classmethod
    def fail(cls, reason: RejectReason) -> "CertificateCheck":
        logger.debug("certificate rejected: %s", reason.value)
        return cls(False, reason)
