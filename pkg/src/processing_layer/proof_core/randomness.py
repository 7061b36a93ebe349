"""
randomness.py
-----------------
Seeded random streams for provers, verifiers and the harness.

Streams are numpy PCG64 generators keyed by (seed, role, label), so the
prover and verifier never share state even when given equal seeds.
"""

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from ..errors import ConfigurationError
from .protocol_enums import Role

SEED_LIMIT = 1 << 64


def derive_seed(master: int, index: int) -> int:
    """Independent 64-bit seed number `index` derived from `master`."""
    state = np.random.SeedSequence([int(master) % SEED_LIMIT, int(index)]).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])


@dataclass
class RandomStream:
    """Uniform integers for one protocol party."""
    seed: int
    role: Role
    label: int = 0
    _generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.seed < SEED_LIMIT:
            raise ConfigurationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        sequence = np.random.SeedSequence([self.seed, self.role.stream_label, self.label])
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) for any n >= 1, including n > 2^63."""
        if n < 1:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        if n <= (1 << 62):
            return int(self._generator.integers(0, n))
        width = (n.bit_length() + 7) // 8
        mask = (1 << n.bit_length()) - 1
        while True:
            candidate = int.from_bytes(self._generator.bytes(width), "big") & mask
            if candidate < n:
                return candidate

    def choice(self, items: Sequence[Any]) -> Any:
        if not items:
            raise ValueError("choice from an empty sequence")
        return items[self.randbelow(len(items))]

    def coin(self) -> bool:
        return self.randbelow(2) == 1
