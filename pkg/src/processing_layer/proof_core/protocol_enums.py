"""
protocol_enums.py
-----------------
Enum definitions shared by protocol execution and the adversarial harness
"""

from enum import Enum


class Verdict(Enum):
    """The two verifier verdicts."""
    CANONICAL = "canonical"
    BOT = "bot"


class Role(Enum):
    """Transcript roles; every protocol here speaks prover-first."""
    PROVER = "prover"
    VERIFIER = "verifier"

    @property
    def stream_label(self) -> int:
        return 1 if self is Role.PROVER else 2


class ProblemTag(Enum):
    """Problem tags used in instance headers and transcripts."""
    LP = "lp"
    THREESUM = "threesum"
    HITTING_SET = "hittingset"
    OV = "ov"
    ZWT = "zwt"
    FOMC = "fomc"
    KCLIQUE = "kclique"


class MutationKind(Enum):
    """Transcript-level mutations applied to the prover's message."""
    FLIP_SOLUTION_BLOCK = "flip-solution-block"
    TRUNCATE_CERTIFICATE = "truncate-certificate"
    SWAP_CERTIFICATE_ENTRIES = "swap-certificate-entries"
    REPLACE_PRIME = "replace-prime"
    INFLATE_COUNT = "inflate-count"
    TAMPER_COEFFICIENTS = "tamper-coefficients"
    ECHO_HONEST = "echo-honest"


class RejectReason(Enum):
    """Tags carried by Bot outcomes."""
    MALFORMED = "malformed"
    NO_SOLUTION = "no-solution"
    NOT_A_SOLUTION = "not-a-solution"
    EARLIER_SOLUTION = "earlier-solution"
    BAD_PRIME = "bad-prime"
    BAD_COUNT = "bad-count"
    BAD_ORDER = "bad-order"
    BAD_ENTRY = "bad-entry"
    BAD_WITNESS = "bad-witness"
    IRREDUCIBILITY = "irreducibility"
    POLYNOMIAL_IDENTITY = "polynomial-identity"
    SIZE_BOUND = "size-bound"
    PRIMAL_INFEASIBLE = "primal-infeasible"
    DUAL_INFEASIBLE = "dual-infeasible"
    DUALITY_GAP = "duality-gap"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    BAD_CERTIFICATE = "bad-certificate"
    UNKNOWN_CHECKER = "unknown-checker"
