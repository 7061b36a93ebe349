"""
src/input_layer/instance_io.py

Reading and writing instance and transcript files
"""

import logging
import os
from pathlib import Path
from typing import Any, Union

from ..processing_layer.proof_core.registry import ParsedInstance, parse_instance_text, serialize_instance
from ..processing_layer.proof_core.transcript import Transcript

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]


def read_text(path: PathLike) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def write_text(path: PathLike, text: str) -> Path:
    target = Path(path)
    if target.parent and not target.parent.exists():
        os.makedirs(target.parent, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return target


def load_instance(path: PathLike) -> ParsedInstance:
    """
    Parse an instance file.

    Raises:
        OSError: file cannot be read
        InstanceParseError: file content is not a valid instance
    """
    parsed = parse_instance_text(read_text(path))
    logger.debug("loaded %s instance from %s (digest %s)", parsed.tag, path, parsed.digest[:12])
    return parsed


def save_instance(path: PathLike, tag: str, instance: Any) -> Path:
    """Write the canonical text form of an instance."""
    target = write_text(path, serialize_instance(tag, instance))
    logger.info("wrote %s instance to %s", tag, target)
    return target


def load_transcript(path: PathLike) -> Transcript:
    """
    Raises:
        OSError: file cannot be read
        MessageFormatError: file content is not a transcript
    """
    return Transcript.decode(read_text(path))


def save_transcript(path: PathLike, transcript: Transcript) -> Path:
    target = write_text(path, transcript.encode())
    logger.info("wrote %s transcript to %s", transcript.problem, target)
    return target
