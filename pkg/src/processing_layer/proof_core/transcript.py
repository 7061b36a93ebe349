"""
transcript.py
-----------------
Ordered prover/verifier messages bound to an instance digest.

File form: a header section (`problem`, `instance-digest`) followed by one
section per message whose first line is `role: prover|verifier`.
"""

from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

from ..errors import MessageFormatError
from .codec import Line, decode_document, encode_document, encode_section
from .outcome import ProtocolOutcome
from .protocol_enums import Role


@dataclass(frozen=True)
class Message:
    role: Role
    lines: Tuple[Line, ...]

    @property
    def payload(self) -> str:
        return encode_section(self.lines)


@dataclass(frozen=True)
class Transcript:
    """Immutable transcript; roles alternate starting with the prover."""
    problem: str
    instance_digest: str
    messages: Tuple[Message, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for index, message in enumerate(self.messages):
            expected = Role.PROVER if index % 2 == 0 else Role.VERIFIER
            if message.role is not expected:
                raise MessageFormatError(
                    f"message {index + 1} has role {message.role.value}, expected {expected.value}"
                )

    def append(self, role: Role, lines: Sequence[Line]) -> "Transcript":
        return replace(self, messages=self.messages + (Message(role, tuple(lines)),))

    def with_message(self, index: int, lines: Sequence[Line]) -> "Transcript":
        """Copy with message `index` replaced, keeping its role."""
        messages = list(self.messages)
        messages[index] = Message(messages[index].role, tuple(lines))
        return replace(self, messages=tuple(messages))

    def prover_messages(self) -> List[Message]:
        return [m for m in self.messages if m.role is Role.PROVER]

    def first_prover_message(self) -> Message:
        provers = self.prover_messages()
        if not provers:
            raise MessageFormatError("transcript holds no prover message")
        return provers[0]

    def recorded_outcome(self) -> Optional[ProtocolOutcome]:
        verifiers = [m for m in self.messages if m.role is Role.VERIFIER]
        if not verifiers:
            return None
        return ProtocolOutcome.from_lines(list(verifiers[-1].lines))

    def prover_only(self) -> "Transcript":
        """Transcript truncated after the first prover message."""
        return replace(self, messages=self.messages[:1])

    def encode(self) -> str:
        sections: List[List[Line]] = [
            [("problem", self.problem), ("instance-digest", self.instance_digest)]
        ]
        for message in self.messages:
            sections.append([("role", message.role.value)] + list(message.lines))
        return encode_document(sections)

    @classmethod
    def decode(cls, text: str) -> "Transcript":
        sections = decode_document(text)
        if not sections:
            raise MessageFormatError("empty transcript")
        header = dict(sections[0])
        if set(header) != {"problem", "instance-digest"}:
            raise MessageFormatError("transcript header needs exactly problem and instance-digest")
        messages = []
        for section in sections[1:]:
            key, value = section[0]
            if key != "role":
                raise MessageFormatError("message section must start with a role line")
            try:
                role = Role(value)
            except ValueError as exc:
                raise MessageFormatError(f"unknown role {value!r}") from exc
            messages.append(Message(role, tuple(section[1:])))
        return cls(header["problem"], header["instance-digest"], tuple(messages))
