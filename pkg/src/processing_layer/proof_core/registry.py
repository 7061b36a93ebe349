"""
registry.py
-----------------
Problem registry: instance codecs, protocol pairs and oracles per tag.

Problem modules are imported lazily, the first time their tag is looked up,
so proof_core never depends on the problem packages at import time.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from ..errors import ConfigurationError, InstanceParseError
from .codec import Line, SectionReader, decode_document, digest_text, encode_document
from .protocol import ProtocolPair
from .protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from .protocol_enums import ProblemTag

logger = logging.getLogger(__name__)

PairBuilder = Callable[[Any, ProtocolParameters], ProtocolPair]


@dataclass(frozen=True)
class ProblemEntry:
    """
    Everything the runner, harness and CLI need to know about one problem.

    Attributes:
        tag: problem tag
        parse: instance body reader -> instance object
        serialize: instance object -> body lines (without the problem line)
        make_pair: (instance, parameters) -> honest prover and verifier
        oracle: instance -> canonical solution text, or None
        alternatives: (instance, limit) -> other valid solutions as text
    """
    tag: ProblemTag
    parse: Callable[[SectionReader], Any]
    serialize: Callable[[Any], List[Line]]
    make_pair: PairBuilder
    oracle: Callable[[Any], Optional[str]]
    alternatives: Callable[[Any, int], List[str]]

    @property
    def name(self) -> str:
        return self.tag.value


class ParsedInstance(NamedTuple):
    tag: str
    instance: Any
    digest: str


class ProblemFactory:
    """Builds registry entries, importing each problem module on demand."""

    @staticmethod
    def create_entry(tag: ProblemTag) -> ProblemEntry:
        builders: Dict[ProblemTag, Callable[[], ProblemEntry]] = {
            ProblemTag.LP: ProblemFactory._lp,
            ProblemTag.THREESUM: ProblemFactory._threesum,
            ProblemTag.HITTING_SET: ProblemFactory._hitting_set,
            ProblemTag.OV: ProblemFactory._ov,
            ProblemTag.ZWT: ProblemFactory._zwt,
            ProblemTag.FOMC: ProblemFactory._fomc,
            ProblemTag.KCLIQUE: ProblemFactory._kclique,
        }
        return builders[tag]()

    @staticmethod
    def _lp() -> ProblemEntry:
        from ..lp_proof.lp_protocol import LP_ENTRY
        return LP_ENTRY

    @staticmethod
    def _threesum() -> ProblemEntry:
        from ..fine_grained.threesum import THREESUM_ENTRY
        return THREESUM_ENTRY

    @staticmethod
    def _hitting_set() -> ProblemEntry:
        from ..fine_grained.hitting_set import HITTING_SET_ENTRY
        return HITTING_SET_ENTRY

    @staticmethod
    def _ov() -> ProblemEntry:
        from ..fine_grained.orthogonal_vectors import OV_ENTRY
        return OV_ENTRY

    @staticmethod
    def _zwt() -> ProblemEntry:
        from ..fine_grained.zero_weight_triangle import ZWT_ENTRY
        return ZWT_ENTRY

    @staticmethod
    def _fomc() -> ProblemEntry:
        from ..fine_grained.model_checking import FOMC_ENTRY
        return FOMC_ENTRY

    @staticmethod
    def _kclique() -> ProblemEntry:
        from ..fine_grained.kclique import KCLIQUE_ENTRY
        return KCLIQUE_ENTRY


_ENTRIES: Dict[ProblemTag, ProblemEntry] = {}


def resolve_tag(tag: str) -> ProblemTag:
    try:
        return ProblemTag(tag)
    except ValueError as exc:
        known = ", ".join(t.value for t in ProblemTag)
        raise ConfigurationError(f"unknown problem {tag!r}; choose from {known}") from exc


def get_entry(tag: str) -> ProblemEntry:
    """Registry entry for a tag, building it on first use."""
    resolved = resolve_tag(tag)
    if resolved not in _ENTRIES:
        _ENTRIES[resolved] = ProblemFactory.create_entry(resolved)
        logger.debug("registered problem %s", resolved.value)
    return _ENTRIES[resolved]


def registered_tags() -> List[str]:
    return [t.value for t in ProblemTag]


def serialize_instance(tag: str, instance: Any) -> str:
    entry = get_entry(tag)
    return encode_document([[("problem", entry.name)] + entry.serialize(instance)])


def instance_digest(tag: str, instance: Any) -> str:
    """SHA-256 of the canonical re-serialization, independent of input layout."""
    return digest_text(serialize_instance(tag, instance))


def parse_instance_text(text: str) -> ParsedInstance:
    """
    Parse an instance document whose first line is `problem: <tag>`.

    Raises:
        InstanceParseError: missing header, unknown tag or bad body
    """
    sections = decode_document(text, InstanceParseError)
    if len(sections) != 1:
        raise InstanceParseError(f"instance must be a single section, got {len(sections)}")
    lines = sections[0]
    key, tag = lines[0]
    if key != "problem":
        raise InstanceParseError("instance must start with a 'problem:' line")
    try:
        entry = get_entry(tag)
    except ConfigurationError as exc:
        raise InstanceParseError(str(exc)) from exc
    instance = entry.parse(SectionReader(lines[1:], InstanceParseError))
    return ParsedInstance(entry.name, instance, instance_digest(entry.name, instance))


def build_pair(
    parsed: ParsedInstance, params: ProtocolParameters = DEFAULT_PARAMETERS
) -> ProtocolPair:
    return get_entry(parsed.tag).make_pair(parsed.instance, params)


def canonical_solution(parsed: ParsedInstance) -> Optional[str]:
    """Brute-force canonical solution text, or None when no solution exists."""
    return get_entry(parsed.tag).oracle(parsed.instance)


def alternative_solutions(parsed: ParsedInstance, limit: int = 8) -> Tuple[str, ...]:
    return tuple(get_entry(parsed.tag).alternatives(parsed.instance, limit))
