"""
protocol_config.py
-----------------
Tunable protocol parameters with their documented defaults.
"""

from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Mapping


@dataclass(frozen=True)
class ProtocolParameters:
    """Parameters shared by the prime-based and field-based protocols."""
    prime_retry_cap: int = 64           # consecutive oversized primes before giving up
    min_prime_pool: int = 16            # floor on the prime pool for tiny n
    threesum_magnitude_exponent: int = 3  # |entry| < max(n, 16) ** exponent
    ov_error_exponent: int = 2          # soundness error n ** -exponent
    fomc_max_quantifiers: int = 4
    kclique_max_k: int = 4

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{item.name} must be a positive integer, got {value!r}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "ProtocolParameters":
        known = {item.name for item in fields(cls)}
        return cls(**{k: v for k, v in mapping.items() if k in known})

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


DEFAULT_PARAMETERS = ProtocolParameters()
