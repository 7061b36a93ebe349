"""
adversary.py
-----------------
Transcript-level cheating provers.

An adversary takes the honest prover message and applies one mutation.
Mutations understand the shared message vocabulary: `solution`, `prime`,
`count`, `coefficient` and repeated certificate lines.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..algebra.primes import is_prime, prime_pool
from ..errors import ConfigurationError
from .codec import INT_PATTERN, Line
from .protocol import NONE_TOKEN, Payload
from .protocol_enums import MutationKind
from .randomness import RandomStream
from .transcript import Transcript

_RATIONAL_TOKEN = re.compile(r"^-?\d+/\d+$")
SOLUTION_KEY = "solution"


@dataclass(frozen=True)
class AdversaryPolicy:
    """Mutation kind plus the seed its trial streams derive from."""
    kind: MutationKind
    seed: int = 0

    @classmethod
    def from_name(cls, name: str, seed: int = 0) -> "AdversaryPolicy":
        try:
            return cls(MutationKind(name), seed)
        except ValueError as exc:
            known = ", ".join(k.value for k in MutationKind)
            raise ConfigurationError(f"unknown policy {name!r}; choose from {known}") from exc

    @property
    def name(self) -> str:
        return self.kind.value


def _perturb_token(token: str, rand: RandomStream) -> str:
    if INT_PATTERN.match(token):
        return str(int(token) + rand.choice((-2, -1, 1, 2)))
    if _RATIONAL_TOKEN.match(token):
        step = Fraction(rand.choice((-1, 1)), rand.choice((1, 2, 3)))
        return str(Fraction(token) + step)
    return "1" if token == "0" else "0"


def _certificate_indices(lines: Sequence[Line]) -> List[int]:
    return [i for i, (k, _) in enumerate(lines) if k != SOLUTION_KEY]


def _flip_solution(lines: Payload, rand: RandomStream, alternatives: Sequence[str]) -> Payload:
    positions = [i for i, (k, _) in enumerate(lines) if k == SOLUTION_KEY]
    if not positions:
        return lines
    index = positions[0]
    current = lines[index][1]
    others = [a for a in alternatives if a != current]
    if others and (current == NONE_TOKEN or rand.coin()):
        lines[index] = (SOLUTION_KEY, rand.choice(others))
        return lines
    tokens = current.split()
    if current == NONE_TOKEN or not tokens:
        return lines
    slot = rand.randbelow(len(tokens))
    tokens[slot] = _perturb_token(tokens[slot], rand)
    lines[index] = (SOLUTION_KEY, " ".join(tokens))
    return lines


def _truncate(lines: Payload, rand: RandomStream) -> Payload:
    candidates = _certificate_indices(lines) or list(range(len(lines)))
    if not candidates:
        return lines
    index = rand.choice(candidates)
    key, value = lines[index]
    tokens = value.split()
    if len(tokens) > 1:
        lines[index] = (key, " ".join(tokens[:-1]))
    else:
        del lines[index]
    return lines


def _swap(lines: Payload, rand: RandomStream) -> Payload:
    groups: Dict[str, List[int]] = {}
    for i in _certificate_indices(lines):
        groups.setdefault(lines[i][0], []).append(i)
    pairs = [
        (a, b)
        for members in groups.values()
        for x, a in enumerate(members)
        for b in members[x + 1 :]
        if lines[a][1] != lines[b][1]
    ]
    if pairs:
        a, b = rand.choice(pairs)
        lines[a], lines[b] = (lines[a][0], lines[b][1]), (lines[b][0], lines[a][1])
        return lines
    for i in _certificate_indices(lines):
        tokens = lines[i][1].split()
        slots = [(x, y) for x in range(len(tokens)) for y in range(x + 1, len(tokens)) if tokens[x] != tokens[y]]
        if slots:
            x, y = rand.choice(slots)
            tokens[x], tokens[y] = tokens[y], tokens[x]
            lines[i] = (lines[i][0], " ".join(tokens))
            return lines
    return lines


def _replacement_prime(current: int, rand: RandomStream) -> int:
    pool = [p for p in prime_pool(64) if p != current]
    options = [rand.choice(pool), current * 3]
    candidate = current + 1
    while not is_prime(candidate):
        candidate += 1
    options.append(candidate)
    if current > 2:
        below = current - 1
        while below > 1 and not is_prime(below):
            below -= 1
        if below > 1:
            options.append(below)
    return rand.choice(options)


def _replace_prime(lines: Payload, rand: RandomStream) -> Payload:
    for i, (key, value) in enumerate(lines):
        if key == "prime" and INT_PATTERN.match(value):
            lines[i] = (key, str(_replacement_prime(int(value), rand)))
    return lines


def _inflate_count(lines: Payload, rand: RandomStream) -> Payload:
    for i, (key, value) in enumerate(lines):
        if key == "count" and INT_PATTERN.match(value):
            lines[i] = (key, str(int(value) + 1 + rand.randbelow(3)))
    return lines


def _tamper_coefficients(lines: Payload, rand: RandomStream) -> Payload:
    coefficient_rows = [i for i, (k, _) in enumerate(lines) if k == "coefficient"]
    primes = [int(v) for k, v in lines if k == "prime" and INT_PATTERN.match(v)]
    if not coefficient_rows or not primes or primes[0] < 2:
        candidates = _certificate_indices(lines)
        if not candidates:
            return lines
        index = rand.choice(candidates)
        tokens = lines[index][1].split() or ["0"]
        slot = rand.randbelow(len(tokens))
        tokens[slot] = _perturb_token(tokens[slot], rand)
        lines[index] = (lines[index][0], " ".join(tokens))
        return lines
    p = primes[0]
    index = rand.choice(coefficient_rows)
    tokens = lines[index][1].split()
    slot = rand.randbelow(len(tokens))
    tokens[slot] = str((int(tokens[slot]) + 1 + rand.randbelow(p - 1)) % p)
    lines[index] = ("coefficient", " ".join(tokens))
    return lines


def mutate_payload(
    lines: Sequence[Line],
    kind: MutationKind,
    rand: RandomStream,
    alternatives: Sequence[str] = (),
) -> Payload:
    """
    Apply one mutation to a copy of the prover's message.

    Args:
        lines: honest prover message
        kind: mutation to apply
        rand: mutation stream
        alternatives: other valid solutions in canonical text, used by
            flip-solution-block to claim a real but non-canonical answer

    Returns:
        Payload: mutated copy; identical content for echo-honest
    """
    copy: Payload = list(lines)
    if kind is MutationKind.ECHO_HONEST:
        return copy
    if kind is MutationKind.FLIP_SOLUTION_BLOCK:
        return _flip_solution(copy, rand, alternatives)
    if kind is MutationKind.TRUNCATE_CERTIFICATE:
        return _truncate(copy, rand)
    if kind is MutationKind.SWAP_CERTIFICATE_ENTRIES:
        return _swap(copy, rand)
    if kind is MutationKind.REPLACE_PRIME:
        return _replace_prime(copy, rand)
    if kind is MutationKind.INFLATE_COUNT:
        return _inflate_count(copy, rand)
    if kind is MutationKind.TAMPER_COEFFICIENTS:
        return _tamper_coefficients(copy, rand)
    raise ConfigurationError(f"unsupported mutation {kind}")


def mutate_transcript(
    transcript: Transcript,
    policy: AdversaryPolicy,
    rand: RandomStream,
    alternatives: Sequence[str] = (),
) -> Transcript:
    """Transcript with its first prover message mutated and no verifier reply."""
    base = transcript.prover_only()
    if policy.kind is MutationKind.ECHO_HONEST:
        return base
    lines = mutate_payload(base.messages[0].lines, policy.kind, rand, alternatives)
    return base.with_message(0, lines)


def single_field_mutations(lines: Sequence[Line], deltas: Sequence[int] = (-1, 1, 2)) -> List[Payload]:
    """
    Every message obtained by shifting one integer token by one delta.

    Used for exhaustive certificate-soundness sweeps.
    """
    out: List[Payload] = []
    for i, (key, value) in enumerate(lines):
        tokens = value.split()
        for slot, token in enumerate(tokens):
            if not INT_PATTERN.match(token):
                continue
            for delta in deltas:
                changed = list(tokens)
                changed[slot] = str(int(token) + delta)
                mutated = list(lines)
                mutated[i] = (key, " ".join(changed))
                out.append(mutated)
    return out


def first_index_of(lines: Sequence[Line], key: str) -> Optional[int]:
    for i, (k, _) in enumerate(lines):
        if k == key:
            return i
    return None
