"""
brute_oracle.py
-----------------
Exhaustive canonical-solution oracles, guarded by desk-scale size limits.

The oracles share no code with the provers: they enumerate candidates in
canonical order and return the first solution as its canonical text. For
LP the sequential lexicographic oracle stands in for enumeration.
"""

import logging
from typing import Any, Callable, Dict, Mapping, Optional

from ..errors import OracleSizeError
from ..proof_core.protocol_enums import ProblemTag
from ..proof_core.registry import get_entry, resolve_tag

logger = logging.getLogger(__name__)

DEFAULT_DESK_LIMITS: Dict[str, Dict[str, int]] = {
    "lp": {"m": 8, "n": 8},
    "threesum": {"n": 64},
    "hittingset": {"m": 400},
    "ov": {"n": 32, "d": 16},
    "zwt": {"n": 24},
    "fomc": {"n": 10, "k": 4},
    "kclique": {"n": 16, "k": 4},
}

_MEASURES: Dict[ProblemTag, Callable[[Any], Dict[str, int]]] = {
    ProblemTag.LP: lambda lp: {"m": lp.m, "n": lp.n},
    ProblemTag.THREESUM: lambda inst: {"n": inst.n},
    ProblemTag.HITTING_SET: lambda inst: {"m": inst.size},
    ProblemTag.OV: lambda inst: {"n": inst.n, "d": inst.d},
    ProblemTag.ZWT: lambda inst: {"n": inst.n},
    ProblemTag.FOMC: lambda inst: {"n": inst.graph.n, "k": inst.formula.k},
    ProblemTag.KCLIQUE: lambda inst: {"n": inst.graph.n, "k": inst.k},
}


def instance_size(tag: str, instance: Any) -> Dict[str, int]:
    return _MEASURES[resolve_tag(tag)](instance)


def check_desk_scale(tag: str, instance: Any, limits: Optional[Mapping[str, Mapping[str, int]]] = None) -> None:
    """
    Raises:
        OracleSizeError: some size measure exceeds its limit
    """
    resolved = resolve_tag(tag)
    bounds = (limits or DEFAULT_DESK_LIMITS).get(resolved.value, {})
    for name, value in instance_size(resolved.value, instance).items():
        if name in bounds and value > bounds[name]:
            raise OracleSizeError(f"{resolved.value}: {name}={value} exceeds the oracle limit {bounds[name]}")


def brute_oracle(
    tag: str, instance: Any, limits: Optional[Mapping[str, Mapping[str, int]]] = None
) -> Optional[str]:
    """
    Canonical solution text by exhaustive search, or None when none exists.

    Args:
        tag: problem tag
        instance: parsed instance of that problem
        limits: per-tag size limits; DEFAULT_DESK_LIMITS when omitted

    Raises:
        OracleSizeError: instance is larger than the limits allow
    """
    check_desk_scale(tag, instance, limits)
    solution = get_entry(tag).oracle(instance)
    logger.debug("oracle %s -> %s", tag, solution)
    return solution
