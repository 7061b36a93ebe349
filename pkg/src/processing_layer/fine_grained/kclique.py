"""
kclique.py
-----------------
Pseudo-deterministic proof for k-Clique via the lex-first composer.

Blocks are the vertices v_1 < .. < v_k (1-based labels); every prefix
nonexistence claim is checked by brute force over the restricted vertex
range.
"""

from itertools import combinations
from typing import List, Optional

from ..errors import ConfigurationError
from ..proof_core.codec import format_ints
from ..proof_core.composer import Block, LexSearchSpec, brute_force_prefix_check, compose_lex_first
from ..proof_core.protocol import ProtocolPair
from ..proof_core.protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from ..proof_core.protocol_enums import ProblemTag
from ..proof_core.registry import ProblemEntry
from .instances import CliqueInstance

MIN_K = 3


def is_clique(instance: CliqueInstance, block: Block) -> bool:
    """True iff block is strictly increasing and pairwise adjacent."""
    if any(a >= b for a, b in zip(block, block[1:])):
        return False
    adjacency = instance.graph.adjacency
    return all(adjacency[u - 1, v - 1] for u, v in combinations(block, 2))


def _vertex_domains(instance: CliqueInstance):
    labels = tuple(range(1, instance.graph.n + 1))
    return [labels] * instance.k


def cliques(instance: CliqueInstance, limit: int) -> List[Block]:
    found: List[Block] = []
    for block in combinations(range(1, instance.graph.n + 1), instance.k):
        if is_clique(instance, block):
            found.append(block)
            if len(found) >= limit:
                break
    return found


def _first_clique(instance: CliqueInstance) -> Optional[Block]:
    found = cliques(instance, 1)
    return found[0] if found else None


def kclique_psd(instance: CliqueInstance, params: ProtocolParameters = DEFAULT_PARAMETERS) -> ProtocolPair:
    """
    Raises:
        ConfigurationError: k outside [3, kclique_max_k]
    """
    if not MIN_K <= instance.k <= params.kclique_max_k:
        raise ConfigurationError(f"k must lie in [{MIN_K}, {params.kclique_max_k}], got {instance.k}")
    spec = LexSearchSpec(
        tag=ProblemTag.KCLIQUE.value,
        block_count=instance.k,
        block_domains=_vertex_domains,
        existence_check=is_clique,
        prefix_nonexistence_check=brute_force_prefix_check(is_clique, _vertex_domains),
        solver=_first_clique,
    )
    return compose_lex_first(spec, instance)


def kclique_oracle(instance: CliqueInstance) -> Optional[str]:
    block = _first_clique(instance)
    return None if block is None else format_ints(block)


KCLIQUE_ENTRY = ProblemEntry(
    tag=ProblemTag.KCLIQUE,
    parse=CliqueInstance.from_reader,
    serialize=CliqueInstance.to_lines,
    make_pair=kclique_psd,
    oracle=kclique_oracle,
    alternatives=lambda instance, limit: [format_ints(b) for b in cliques(instance, limit)],
)
