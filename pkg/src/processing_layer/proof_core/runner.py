"""
runner.py
-----------------
Protocol execution and transcript replay.

execute_protocol runs the honest prover, feeds its message to the verifier
and records both messages together with the measured prover and verifier
wall times.
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ..errors import ConfigurationError, DigestMismatchError
from .codec import Line
from .outcome import ProtocolOutcome
from .protocol import ProverHandle, VerifierHandle, decide_safely
from .protocol_enums import Role
from .randomness import RandomStream
from .registry import ParsedInstance, parse_instance_text
from .transcript import Transcript

logger = logging.getLogger(__name__)

DEFAULT_PROVER_SEED = 0xC0FFEE
DEFAULT_VERIFIER_SEED = 0xB07

InstanceLike = Union[str, ParsedInstance]


@dataclass(frozen=True)
class ProtocolRun:
    """One protocol execution and its timings."""
    outcome: ProtocolOutcome
    transcript: Transcript
    prover_seconds: float
    verifier_seconds: float

    def to_dict(self) -> dict:
        return {
            "problem": self.transcript.problem,
            **self.outcome.to_dict(),
            "prover_seconds": self.prover_seconds,
            "verifier_seconds": self.verifier_seconds,
        }


def _as_parsed(instance: InstanceLike) -> ParsedInstance:
    return parse_instance_text(instance) if isinstance(instance, str) else instance


def _check_tags(parsed: ParsedInstance, prover: Optional[ProverHandle], verifier: VerifierHandle):
    tags = {parsed.tag, verifier.problem}
    if prover is not None:
        tags.add(prover.problem)
    if len(tags) != 1:
        raise ConfigurationError(f"problem tags disagree: {', '.join(sorted(tags))}")


def verify_message(
    parsed: ParsedInstance,
    verifier: VerifierHandle,
    lines: Tuple[Line, ...],
    verifier_seed: int = DEFAULT_VERIFIER_SEED,
) -> ProtocolOutcome:
    """Verifier verdict on one prover message under a fixed seed."""
    _check_tags(parsed, None, verifier)
    rand = RandomStream(verifier_seed, Role.VERIFIER)
    return decide_safely(verifier, parsed.instance, list(lines), rand)


def execute_protocol(
    instance: InstanceLike,
    prover: ProverHandle,
    verifier: VerifierHandle,
    seeds: Tuple[int, int] = (DEFAULT_PROVER_SEED, DEFAULT_VERIFIER_SEED),
) -> ProtocolRun:
    """
    Run the prover-first protocol once.

    Args:
        instance: instance text or an already parsed instance
        prover: honest prover for the instance's problem
        verifier: verifier for the same problem
        seeds: (prover seed, verifier seed)

    Returns:
        ProtocolRun: outcome, transcript and both wall times

    Raises:
        InstanceParseError: instance text is malformed
        ConfigurationError: prover, verifier and instance tags differ
        RetryExhaustedError: the honest prover could not find a usable prime
    """
    parsed = _as_parsed(instance)
    _check_tags(parsed, prover, verifier)
    prover_seed, verifier_seed = seeds

    start = time.perf_counter()
    lines = prover.first_message(parsed.instance, RandomStream(prover_seed, Role.PROVER))
    prover_seconds = time.perf_counter() - start

    transcript = Transcript(parsed.tag, parsed.digest).append(Role.PROVER, lines)

    start = time.perf_counter()
    outcome = verify_message(parsed, verifier, tuple(lines), verifier_seed)
    verifier_seconds = time.perf_counter() - start

    transcript = transcript.append(Role.VERIFIER, outcome.to_lines())
    logger.info(
        "%s run: %s (prover %.4fs, verifier %.4fs)",
        parsed.tag, outcome.describe(), prover_seconds, verifier_seconds,
    )
    return ProtocolRun(outcome, transcript, prover_seconds, verifier_seconds)


def run_protocol(
    instance: InstanceLike,
    prover: ProverHandle,
    verifier: VerifierHandle,
    seeds: Tuple[int, int] = (DEFAULT_PROVER_SEED, DEFAULT_VERIFIER_SEED),
) -> Tuple[ProtocolOutcome, Transcript]:
    run = execute_protocol(instance, prover, verifier, seeds)
    return run.outcome, run.transcript


def replay_transcript(
    instance: InstanceLike,
    transcript: Transcript,
    verifier: VerifierHandle,
    verifier_seed: int = DEFAULT_VERIFIER_SEED,
) -> ProtocolOutcome:
    """
    Re-run the verifier on a recorded prover message.

    Raises:
        DigestMismatchError: transcript was recorded against another instance
        ConfigurationError: transcript problem differs from the verifier's
    """
    parsed = _as_parsed(instance)
    if transcript.instance_digest != parsed.digest:
        raise DigestMismatchError(
            f"transcript digest {transcript.instance_digest[:12]} does not match "
            f"instance digest {parsed.digest[:12]}"
        )
    if transcript.problem != parsed.tag:
        raise ConfigurationError(f"transcript is for {transcript.problem}, instance is {parsed.tag}")
    message = transcript.first_prover_message()
    return verify_message(parsed, verifier, message.lines, verifier_seed)
