"""
proof_core package
-----------------------
Problem-agnostic protocol machinery

Components:
- codec.py: canonical key/value text form and digests
- outcome.py / transcript.py: verdicts and recorded messages
- randomness.py: seeded prover and verifier streams
- protocol.py: prover/verifier handles
- composer.py: lexicographically-first composer
- registry.py: per-problem codecs, protocol pairs and oracles
- runner.py: protocol execution and replay
- adversary.py / harness.py: cheating provers and trial statistics
"""

from .protocol_enums import Verdict, Role, ProblemTag, MutationKind, RejectReason
from .outcome import ProtocolOutcome
from .transcript import Message, Transcript
from .randomness import RandomStream, derive_seed
from .protocol_config import ProtocolParameters, DEFAULT_PARAMETERS
from .protocol import ProverHandle, VerifierHandle, ProtocolPair
from .composer import LexSearchSpec, compose_lex_first
from .registry import ProblemEntry, ParsedInstance, get_entry, parse_instance_text, serialize_instance
from .runner import ProtocolRun, execute_protocol, run_protocol, replay_transcript
from .adversary import AdversaryPolicy, mutate_payload
from .harness import HarnessReport, run_trials, estimate_soundness, estimate_completeness

__all__ = [
    'Verdict',
    'Role',
    'ProblemTag',
    'MutationKind',
    'RejectReason',
    'ProtocolOutcome',
    'Message',
    'Transcript',
    'RandomStream',
    'derive_seed',
    'ProtocolParameters',
    'DEFAULT_PARAMETERS',
    'ProverHandle',
    'VerifierHandle',
    'ProtocolPair',
    'LexSearchSpec',
    'compose_lex_first',
    'ProblemEntry',
    'ParsedInstance',
    'get_entry',
    'parse_instance_text',
    'serialize_instance',
    'ProtocolRun',
    'execute_protocol',
    'run_protocol',
    'replay_transcript',
    'AdversaryPolicy',
    'mutate_payload',
    'HarnessReport',
    'run_trials',
    'estimate_soundness',
    'estimate_completeness',
]
