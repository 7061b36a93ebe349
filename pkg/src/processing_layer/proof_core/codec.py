"""
codec.py
-----------------
Canonical text form shared by instances, prover messages and transcripts.

One `key: value` pair per line, integers in base 10, lists space-separated,
sections separated by a line holding `---`. Blank lines and lines starting
with `#` are ignored when decoding. Digests are SHA-256 over the encoded
form.
"""

import hashlib
import re
from typing import Iterable, List, Optional, Sequence, Tuple, Type

from ..errors import MessageFormatError

KEY_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_.-]*$")
INT_PATTERN = re.compile(r"^-?\d+$")
SECTION_SEPARATOR = "---"

Line = Tuple[str, str]
Section = List[Line]


def format_line(key: str, value: str) -> str:
    if not KEY_PATTERN.match(key):
        raise ValueError(f"invalid key {key!r}")
    if "\n" in value or "\r" in value:
        raise ValueError(f"value for {key!r} spans lines")
    value = value.strip()
    return f"{key}: {value}" if value else f"{key}:"


def encode_section(lines: Iterable[Line]) -> str:
    return "\n".join(format_line(k, v) for k, v in lines)


def encode_document(sections: Sequence[Sequence[Line]]) -> str:
    body = f"\n{SECTION_SEPARATOR}\n".join(encode_section(s) for s in sections)
    return body + "\n"


def decode_document(text: str, error_type: Type[Exception] = MessageFormatError) -> List[Section]:
    """
    Split canonical text into sections of (key, value) lines.

    Args:
        text: encoded document
        error_type: exception raised on a malformed line

    Returns:
        List[Section]: sections in order; empty sections are dropped
    """
    sections: List[Section] = [[]]
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == SECTION_SEPARATOR:
            sections.append([])
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not KEY_PATTERN.match(key):
            raise error_type(f"line {number}: expected 'key: value', got {raw!r}")
        sections[-1].append((key, value.strip()))
    return [s for s in sections if s]


def digest_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_int(token: str, error_type: Type[Exception] = MessageFormatError) -> int:
    if not INT_PATTERN.match(token):
        raise error_type(f"not a base-10 integer: {token!r}")
    return int(token)


def parse_ints(text: str, error_type: Type[Exception] = MessageFormatError) -> List[int]:
    return [parse_int(t, error_type) for t in text.split()]


def format_ints(values: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in values)


class SectionReader:
    """Typed accessors over one decoded section."""

    def __init__(self, lines: Sequence[Line], error_type: Type[Exception] = MessageFormatError):
        self.lines = list(lines)
        self.error_type = error_type

    def keys(self) -> List[str]:
        return [k for k, _ in self.lines]

    def has(self, key: str) -> bool:
        return any(k == key for k, _ in self.lines)

    def repeated(self, key: str) -> List[str]:
        return [v for k, v in self.lines if k == key]

    def optional(self, key: str) -> Optional[str]:
        values = self.repeated(key)
        if len(values) > 1:
            raise self.error_type(f"key {key!r} appears {len(values)} times")
        return values[0] if values else None

    def single(self, key: str) -> str:
        value = self.optional(key)
        if value is None:
            raise self.error_type(f"missing key {key!r}")
        return value

    def int(self, key: str) -> int:
        return parse_int(self.single(key), self.error_type)

    def ints(self, key: str, count: Optional[int] = None) -> List[int]:
        values = parse_ints(self.single(key), self.error_type)
        if count is not None and len(values) != count:
            raise self.error_type(f"key {key!r}: expected {count} integers, got {len(values)}")
        return values

    def int_rows(self, key: str, width: Optional[int] = None) -> List[List[int]]:
        rows = [parse_ints(v, self.error_type) for v in self.repeated(key)]
        if width is not None and any(len(r) != width for r in rows):
            raise self.error_type(f"key {key!r}: every row needs {width} integers")
        return rows

    def ensure_only(self, allowed: Iterable[str]) -> None:
        permitted = set(allowed)
        unknown = [k for k in self.keys() if k not in permitted]
        if unknown:
            raise self.error_type(f"unexpected keys: {', '.join(sorted(set(unknown)))}")
