"""
errors.py
-----------------
Typed error hierarchy shared by every processing package.

Every error derives from ProofSystemError and from the closest builtin
exception, so callers can catch either. A verifier never lets these
escape for prover-supplied bytes: MessageFormatError is turned into Bot.
"""


class ProofSystemError(Exception):
    """Base class for all errors raised by the proof system."""


class InstanceParseError(ProofSystemError, ValueError):
    """Instance text does not follow the problem's format."""


class FormulaError(InstanceParseError):
    """First-order formula is malformed or of an excluded prefix form."""


class ConfigurationError(ProofSystemError, ValueError):
    """Inconsistent setup: tag mismatch, empty block domains, bad trial count."""


class OracleSizeError(ConfigurationError):
    """Instance exceeds the desk-scale bound of the brute-force oracle."""


class ParameterError(ProofSystemError, ValueError):
    """Algebraic or protocol parameters violate a precondition."""


class MessageFormatError(ProofSystemError, ValueError):
    """Prover message could not be decoded."""


class RetryExhaustedError(ProofSystemError, RuntimeError):
    """Honest prover drew too many oversized primes in a row."""


class ProverContractError(ProofSystemError, RuntimeError):
    """Honest prover was asked to certify a false statement."""


class DigestMismatchError(ProofSystemError, ValueError):
    """Transcript was recorded against a different instance."""


class ConvolutionOverflowError(ProofSystemError, ArithmeticError):
    """NTT modulus set cannot represent the exact convolution."""
