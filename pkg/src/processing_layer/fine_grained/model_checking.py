"""
model_checking.py
-----------------
Pseudo-deterministic proof for first-order model checking on graphs.

The formula's leading existential block x_1..x_i is the solution: the
canonical answer is the lexicographically first (x_1, .., x_i) for which
Q_{i+1} .. Q_k ψ holds. Each prefix position j carries a nonexistence
claim over the restricted domain X_j ∩ {x < x_j}, checked by a pluggable
checker; the default `slow-reference` checker brute-forces it.

Instance body:
    n: 5
    formula: E x1 A x2 : (x1 = x2 | edge x1 x2)
    domain: x1 1 2 3      (optional, one per restricted variable)
    edge: 1 2
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from ..errors import ConfigurationError, InstanceParseError
from ..proof_core.codec import Line, SectionReader, format_ints
from ..proof_core.composer import (
    SLOW_REFERENCE,
    Block,
    DomainsFn,
    ExistenceCheck,
    LexSearchSpec,
    PrefixCheck,
    brute_force_prefix_check,
    compose_lex_first,
)
from ..proof_core.protocol import ProtocolPair
from ..proof_core.protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag
from ..proof_core.registry import ProblemEntry
from .fo_formula import Formula, parse_formula
from .instances import Graph, parse_index_line

logger = logging.getLogger(__name__)

CheckerFactory = Callable[[ExistenceCheck, DomainsFn], PrefixCheck]


@dataclass(frozen=True)
class FoModelInstance:
    """Graph, formula and one vertex domain (0-based) per quantified variable."""
    graph: Graph
    formula: Formula
    domains: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.domains) != self.formula.k:
            raise InstanceParseError(f"expected {self.formula.k} domains, got {len(self.domains)}")
        if any(not d or any(not 0 <= v < self.graph.n for v in d) for d in self.domains):
            raise InstanceParseError("every domain must be a non-empty set of graph vertices")

    @classmethod
    def with_full_domains(cls, graph: Graph, formula: Formula) -> "FoModelInstance":
        return cls(graph, formula, tuple(tuple(range(graph.n)) for _ in range(formula.k)))

    @property
    def solution_width(self) -> int:
        return self.formula.existential_head

    def satisfies(self, block: Block) -> bool:
        """Remaining quantified formula under x_j = block[j] (1-based labels)."""
        names = self.formula.variables
        assignment = {names[j]: v - 1 for j, v in enumerate(block)}
        return self.formula.holds(self.domains, self.graph.has_edge, assignment, len(block))

    def label_domains(self) -> List[Tuple[int, ...]]:
        return [tuple(v + 1 for v in d) for d in self.domains[: self.solution_width]]

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "FoModelInstance":
        reader.ensure_only({"n", "edge", "formula", "domain"})
        graph = Graph.read(reader)
        formula = parse_formula(reader.single("formula"), DEFAULT_PARAMETERS.fomc_max_quantifiers)
        restricted: Dict[str, Tuple[int, ...]] = {}
        for text in reader.repeated("domain"):
            name, _, rest = text.strip().partition(" ")
            if name not in formula.variables:
                raise InstanceParseError(f"domain for unknown variable {name!r}")
            if name in restricted:
                raise InstanceParseError(f"variable {name!r} has two domains")
            restricted[name] = tuple(sorted(set(parse_index_line(rest, graph.n))))
        everything = tuple(range(graph.n))
        return cls(graph, formula, tuple(restricted.get(name, everything) for name in formula.variables))

    def to_lines(self) -> List[Line]:
        graph_lines = self.graph.to_lines()
        lines: List[Line] = [graph_lines[0], ("formula", self.formula.render())]
        for name, domain in zip(self.formula.variables, self.domains):
            if len(domain) != self.graph.n:
                lines.append(("domain", f"{name} {format_ints(v + 1 for v in domain)}"))
        return lines + graph_lines[1:]


# ===== CHECKER REGISTRY =====

_CHECKERS: Dict[str, CheckerFactory] = {SLOW_REFERENCE: brute_force_prefix_check}


def register_checker(label: str, factory: CheckerFactory) -> None:
    """Make a prefix-nonexistence checker selectable by label."""
    _CHECKERS[label] = factory
    logger.debug("registered model-checking checker %s", label)


def available_checkers() -> List[str]:
    return sorted(_CHECKERS)


# ===== PROTOCOL =====

def _existence(instance: FoModelInstance, block: Block) -> bool:
    return instance.satisfies(block)


def _domains(instance: FoModelInstance) -> List[Tuple[int, ...]]:
    return instance.label_domains()


def modelcheck_search_spec(instance: FoModelInstance, checker: str = SLOW_REFERENCE) -> LexSearchSpec:
    """
    Raises:
        ConfigurationError: unknown checker label
    """
    if checker not in _CHECKERS:
        raise ConfigurationError(f"unknown checker {checker!r}; choose from {', '.join(available_checkers())}")
    return LexSearchSpec(
        tag=ProblemTag.FOMC.value,
        block_count=instance.solution_width,
        block_domains=_domains,
        existence_check=_existence,
        prefix_nonexistence_check=_CHECKERS[checker](_existence, _domains),
        checker_label=checker,
    )


def modelcheck_psd(
    instance: FoModelInstance,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
    checker: str = SLOW_REFERENCE,
) -> ProtocolPair:
    """Lex-first composer over the leading existential block of the formula."""
    if instance.formula.k > params.fomc_max_quantifiers:
        raise ConfigurationError(f"formula has {instance.formula.k} quantifiers, limit {params.fomc_max_quantifiers}")
    return compose_lex_first(modelcheck_search_spec(instance, checker), instance)


def satisfying_blocks(instance: FoModelInstance, limit: int) -> List[Block]:
    found: List[Block] = []
    for block in product(*instance.label_domains()):
        if instance.satisfies(block):
            found.append(block)
            if len(found) >= limit:
                break
    return found


def modelcheck_oracle(instance: FoModelInstance) -> Optional[str]:
    found = satisfying_blocks(instance, 1)
    return format_ints(found[0]) if found else None


FOMC_ENTRY = ProblemEntry(
    tag=ProblemTag.FOMC,
    parse=FoModelInstance.from_reader,
    serialize=FoModelInstance.to_lines,
    make_pair=lambda instance, params: modelcheck_psd(instance, params),
    oracle=modelcheck_oracle,
    alternatives=lambda instance, limit: [format_ints(b) for b in satisfying_blocks(instance, limit)],
)
