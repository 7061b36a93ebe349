"""
harness.py
-----------------
Adversarial and statistical trials.

Soundness trials mutate the honest prover message with an AdversaryPolicy
and count verdicts that are neither the canonical solution nor Bot.
Completeness trials rerun the honest prover and verifier with fresh seeds.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

from ..errors import ConfigurationError
from .adversary import AdversaryPolicy, mutate_payload
from .outcome import ProtocolOutcome
from .protocol import ProtocolPair, decide_safely
from .protocol_config import DEFAULT_PARAMETERS, ProtocolParameters
from .protocol_enums import MutationKind, Role
from .randomness import RandomStream, derive_seed
from .registry import ParsedInstance, alternative_solutions, build_pair, canonical_solution, parse_instance_text

logger = logging.getLogger(__name__)

HONEST_POLICY = "honest"


@dataclass
class HarnessReport:
    """Verdict tallies for one (instance, policy) trial batch."""
    problem: str
    policy: str
    trials: int
    expected: Optional[str]
    canonical: int = 0       # Canonical(c(x))
    non_canonical: int = 0   # Canonical(y) with y != c(x)
    bot: int = 0
    certified: int = 0       # Bot with a verified nonexistence certificate

    def record(self, outcome: ProtocolOutcome):
        if outcome.is_canonical:
            if self.expected is not None and outcome.solution == self.expected:
                self.canonical += 1
            else:
                self.non_canonical += 1
        else:
            self.bot += 1
            if outcome.certified:
                self.certified += 1

    @property
    def soundness_error(self) -> float:
        return self.non_canonical / self.trials

    @property
    def completeness(self) -> float:
        return self.canonical / self.trials

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["soundness_error"] = self.soundness_error
        data["completeness"] = self.completeness
        return data


def _prepare(instance: Union[str, ParsedInstance]) -> ParsedInstance:
    return parse_instance_text(instance) if isinstance(instance, str) else instance


def _map(function, items: Sequence[int], workers: int) -> List[ProtocolOutcome]:
    if workers <= 1:
        return [function(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, items))


def run_trials(
    instance: Union[str, ParsedInstance],
    policy: Optional[AdversaryPolicy],
    trials: int,
    seed: int,
    expected: Optional[str] = None,
    params: ProtocolParameters = DEFAULT_PARAMETERS,
    workers: int = 1,
    pair: Optional[ProtocolPair] = None,
) -> HarnessReport:
    """
    Run independent trials and tally verdicts.

    Args:
        instance: instance text or parsed instance
        policy: mutation policy; None reruns the honest prover each trial
        trials: number of trials, at least 1
        seed: master seed; every trial derives its own seeds from it
        expected: canonical solution text; computed by the oracle if omitted
        params: protocol parameters for the pair
        workers: thread count for concurrent trials
        pair: prover/verifier override, defaults to the registered pair

    Raises:
        ConfigurationError: trials < 1
    """
    if trials < 1:
        raise ConfigurationError(f"trials must be >= 1, got {trials}")
    parsed = _prepare(instance)
    if expected is None:
        expected = canonical_solution(parsed)
    prover, verifier = pair if pair is not None else build_pair(parsed, params)
    report = HarnessReport(parsed.tag, policy.name if policy else HONEST_POLICY, trials, expected)

    if policy is None:
        def trial(index: int) -> ProtocolOutcome:
            prover_rand = RandomStream(derive_seed(seed, 2 * index), Role.PROVER)
            lines = prover.first_message(parsed.instance, prover_rand)
            verifier_rand = RandomStream(derive_seed(seed, 2 * index + 1), Role.VERIFIER)
            return decide_safely(verifier, parsed.instance, lines, verifier_rand)
    else:
        honest = prover.first_message(parsed.instance, RandomStream(derive_seed(seed, 0), Role.PROVER))
        alternatives = alternative_solutions(parsed) if policy.kind is MutationKind.FLIP_SOLUTION_BLOCK else ()

        def trial(index: int) -> ProtocolOutcome:
            mutation_rand = RandomStream(derive_seed(policy.seed, index), Role.PROVER, label=index + 1)
            lines = mutate_payload(honest, policy.kind, mutation_rand, alternatives)
            verifier_rand = RandomStream(derive_seed(seed, 2 * index + 1), Role.VERIFIER)
            return decide_safely(verifier, parsed.instance, lines, verifier_rand)

    for outcome in _map(trial, range(trials), workers):
        report.record(outcome)
    logger.info(
        "%s/%s: %d trials, canonical %d, non-canonical %d, bot %d",
        report.problem, report.policy, trials, report.canonical, report.non_canonical, report.bot,
    )
    return report


def estimate_soundness(
    instance: Union[str, ParsedInstance],
    adversary: AdversaryPolicy,
    trials: int,
    seed: int,
    expected: Optional[str] = None,
    **kwargs: Any,
) -> float:
    """Fraction of trials whose verdict is neither c(x) nor Bot."""
    return run_trials(instance, adversary, trials, seed, expected, **kwargs).soundness_error


def estimate_completeness(
    instance: Union[str, ParsedInstance],
    trials: int,
    seed: int,
    expected: Optional[str] = None,
    **kwargs: Any,
) -> float:
    """Fraction of honest trials whose verdict is c(x)."""
    return run_trials(instance, None, trials, seed, expected, **kwargs).completeness
