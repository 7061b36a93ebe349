"""
outcome.py
-----------------
Verifier verdicts: Canonical(solution) or Bot.
"""

from dataclasses import dataclass
from typing import List, Optional, Union

from ..errors import MessageFormatError
from .codec import Line, SectionReader
from .protocol_enums import RejectReason, Verdict


@dataclass(frozen=True)
class ProtocolOutcome:
    """
    Exactly one verdict. Canonical carries the non-empty canonical
    serialization of the solution; Bot carries a reason tag and whether the
    rejection came with a verified nonexistence certificate.
    """
    verdict: Verdict
    solution: Optional[str] = None
    reason: Optional[str] = None
    certified: bool = False

    def __post_init__(self):
        if self.verdict is Verdict.CANONICAL:
            if not self.solution or not self.solution.strip():
                raise ValueError("canonical outcome needs a non-empty solution")
            if self.reason is not None or self.certified:
                raise ValueError("canonical outcome carries no rejection data")
        elif self.solution is not None:
            raise ValueError("bot outcome carries no solution")

    @classmethod
    def canonical(cls, solution: str) -> "ProtocolOutcome":
        return cls(Verdict.CANONICAL, solution=solution)

    @classmethod
    def bot(cls, reason: Union[RejectReason, str], certified: bool = False) -> "ProtocolOutcome":
        tag = reason.value if isinstance(reason, RejectReason) else reason
        return cls(Verdict.BOT, reason=tag, certified=certified)

    @property
    def is_canonical(self) -> bool:
        return self.verdict is Verdict.CANONICAL

    @property
    def is_bot(self) -> bool:
        return self.verdict is Verdict.BOT

    def to_lines(self) -> List[Line]:
        lines: List[Line] = [("verdict", self.verdict.value)]
        if self.is_canonical:
            lines.append(("solution", self.solution or ""))
        else:
            lines.append(("reason", self.reason or ""))
            lines.append(("certified", "yes" if self.certified else "no"))
        return lines

    @classmethod
    def from_lines(cls, lines: List[Line]) -> "ProtocolOutcome":
        reader = SectionReader(lines)
        try:
            verdict = Verdict(reader.single("verdict"))
        except ValueError as exc:
            raise MessageFormatError(f"unknown verdict: {exc}") from exc
        if verdict is Verdict.CANONICAL:
            return cls.canonical(reader.single("solution"))
        return cls.bot(reader.single("reason") or "", reader.optional("certified") == "yes")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "solution": self.solution,
            "reason": self.reason,
            "certified": self.certified,
        }

    def describe(self) -> str:
        if self.is_canonical:
            return f"canonical ({self.solution})"
        suffix = ", certified" if self.certified else ""
        return f"bot ({self.reason}{suffix})"
