"""
main.py
-----------------
Command implementations behind the launcher: gen, prove, verify, attack,
oracle and bench. Every command returns a process exit code.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional

import numpy as np

from .config import (
    BENCH_CONFIG,
    DESK_SCALE_LIMITS,
    GENERATOR_LIMITS,
    HARNESS_CONFIG,
    get_default_seeds,
    get_ladder,
    get_protocol_parameters,
)
from ..input_layer.instance_generator import SIZE_DEFAULTS, generate_instance
from ..input_layer.instance_io import load_instance, load_transcript, save_instance, save_transcript
from ..output_layer.logger import proof_logger
from ..output_layer.reports import attack_table, bench_table, export_table, format_table, loglog_slopes
from ..output_layer.run_history import run_history
from ..processing_layer.errors import ConfigurationError, OracleSizeError, ProofSystemError
from ..processing_layer.fine_grained.brute_oracle import brute_oracle
from ..processing_layer.fine_grained.threesum import threesum_prime_pool_profile
from ..processing_layer.proof_core.adversary import AdversaryPolicy
from ..processing_layer.proof_core.harness import run_trials
from ..processing_layer.proof_core.outcome import ProtocolOutcome
from ..processing_layer.proof_core.randomness import derive_seed
from ..processing_layer.proof_core.registry import (
    ParsedInstance,
    build_pair,
    parse_instance_text,
    resolve_tag,
    serialize_instance,
)
from ..processing_layer.proof_core.runner import execute_protocol, replay_transcript

logger = logging.getLogger(__name__)


class ExitCode:
    """Process exit codes"""
    CANONICAL = 0
    BOT = 2
    ERROR = 3


@dataclass
class RunConfig:
    """Options shared by every subcommand"""
    problem: Optional[str] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    transcript_path: Optional[str] = None
    prover_seed: int = field(default_factory=lambda: get_default_seeds()[0])
    verifier_seed: int = field(default_factory=lambda: get_default_seeds()[1])
    seed: int = 0
    trials: int = field(default_factory=lambda: HARNESS_CONFIG["trials"])
    policy: Optional[str] = None
    planted: bool = False
    sizes: Dict[str, int] = field(default_factory=dict)
    ladder: List[int] = field(default_factory=list)
    workers: int = field(default_factory=lambda: HARNESS_CONFIG["workers"])
    verbose: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigurationError(f"trials must be >= 1, got {self.trials}")
        if self.problem is not None:
            self.problem = resolve_tag(self.problem).value

    def require_input(self) -> str:
        if not self.input_path:
            raise ConfigurationError("--in is required for this command")
        return self.input_path


def exit_code_for(outcome: ProtocolOutcome) -> int:
    return ExitCode.CANONICAL if outcome.is_canonical else ExitCode.BOT


def _load(config: RunConfig) -> ParsedInstance:
    parsed = load_instance(config.require_input())
    if config.problem is not None and config.problem != parsed.tag:
        raise ConfigurationError(f"--problem {config.problem} but the instance is {parsed.tag}")
    return parsed


def _print_outcome(outcome: ProtocolOutcome):
    print(f"verdict: {outcome.verdict.value}")
    if outcome.is_canonical:
        print(f"solution: {outcome.solution}")
    else:
        print(f"reason: {outcome.reason}")
        print(f"certified: {str(outcome.certified).lower()}")


# ===== GEN =====

def check_generator_sizes(problem: str, sizes: Mapping[str, int]):
    limits = GENERATOR_LIMITS.get(problem, {})
    for key, value in sizes.items():
        if key in limits and value > limits[key]:
            raise ConfigurationError(f"{problem} {key}={value} exceeds the generator limit {limits[key]}")


def cmd_gen(config: RunConfig) -> int:
    """Write a seeded random instance to --out (stdout when omitted)."""
    if config.problem is None:
        raise ConfigurationError("--problem is required for gen")
    check_generator_sizes(config.problem, config.sizes)
    tag, instance = generate_instance(config.problem, config.seed, config.sizes, config.planted)
    if config.output_path:
        save_instance(config.output_path, tag, instance)
        print(f"instance written to {config.output_path}")
    else:
        print(serialize_instance(tag, instance), end="")
    return ExitCode.CANONICAL


# ===== PROVE / VERIFY =====

def cmd_prove(config: RunConfig) -> int:
    """Run the honest protocol; write the transcript to --out."""
    parsed = _load(config)
    prover, verifier = build_pair(parsed, get_protocol_parameters())
    run = execute_protocol(parsed, prover, verifier, (config.prover_seed, config.verifier_seed))
    if config.output_path:
        save_transcript(config.output_path, run.transcript)
    _print_outcome(run.outcome)
    print(f"prover_seconds: {run.prover_seconds:.6f}")
    print(f"verifier_seconds: {run.verifier_seconds:.6f}")

    details = run.to_dict()
    run_history.add_run("prove", details)
    proof_logger.log_run(details)
    return exit_code_for(run.outcome)


def cmd_verify(config: RunConfig) -> int:
    """Replay a transcript's prover message against --in."""
    parsed = _load(config)
    if not config.transcript_path:
        raise ConfigurationError("--transcript is required for verify")
    transcript = load_transcript(config.transcript_path)
    _, verifier = build_pair(parsed, get_protocol_parameters())
    outcome = replay_transcript(parsed, transcript, verifier, config.verifier_seed)
    _print_outcome(outcome)

    details = {"problem": parsed.tag, **outcome.to_dict()}
    run_history.add_run("verify", details)
    proof_logger.log_run(details)
    return exit_code_for(outcome)


# ===== ATTACK =====

def expected_solution(parsed: ParsedInstance, config: RunConfig) -> Optional[str]:
    """Oracle answer, or the honest protocol's answer when the oracle would be too slow."""
    try:
        return brute_oracle(parsed.tag, parsed.instance, DESK_SCALE_LIMITS)
    except OracleSizeError as exc:
        logger.warning("%s; using the honest protocol output as reference", exc)
        prover, verifier = build_pair(parsed, get_protocol_parameters())
        outcome = execute_protocol(parsed, prover, verifier, (config.prover_seed, config.verifier_seed)).outcome
        return outcome.solution if outcome.is_canonical else None


def cmd_attack(config: RunConfig) -> int:
    """Run every requested adversary policy and print policy, trials, non-canonical accepts."""
    parsed = _load(config)
    names = [config.policy] if config.policy else list(HARNESS_CONFIG["policies"])
    policies = [AdversaryPolicy.from_name(name, derive_seed(config.seed, i)) for i, name in enumerate(names)]
    expected = expected_solution(parsed, config)
    params = get_protocol_parameters()

    reports = []
    for policy in policies:
        report = run_trials(
            parsed, policy, config.trials, config.verifier_seed, expected, params, workers=config.workers
        )
        details = report.to_dict()
        run_history.add_report(details)
        proof_logger.log_attack(details)
        reports.append(details)

    table = attack_table(reports)
    print(format_table(table))
    if config.output_path:
        export_table(table, config.output_path, sheet_name="attack")
    return ExitCode.CANONICAL


# ===== ORACLE =====

def cmd_oracle(config: RunConfig) -> int:
    """Print the brute-force canonical solution (or `none`)."""
    parsed = _load(config)
    solution = brute_oracle(parsed.tag, parsed.instance, DESK_SCALE_LIMITS)
    print(f"solution: {solution if solution is not None else 'none'}")
    if config.verbose and parsed.tag == "threesum":
        profile = threesum_prime_pool_profile(parsed.instance, get_protocol_parameters())
        print(f"threshold: {profile.threshold}")
        print(f"fraction_under_threshold: {profile.fraction_under_threshold:.3f}")
    return ExitCode.CANONICAL


# ===== BENCH =====

def bench_sizes(problem: str, n: int) -> Dict[str, int]:
    """Generator sizes for ladder value n."""
    if problem == "lp":
        return {"m": n, "n": n}
    if problem == "hittingset":
        return {"n": n, "universe": 2 * n, "set_size": min(4, 2 * n)}
    if problem == "kclique":
        return {"n": n, "k": SIZE_DEFAULTS["kclique"]["k"]}
    return {"n": n}


def time_protocol(parsed: ParsedInstance, repeats: int, warmup: int, seeds) -> Dict[str, float]:
    """Median prover and verifier wall times over `repeats` runs after `warmup` discarded runs."""
    prover, verifier = build_pair(parsed, get_protocol_parameters())
    for _ in range(warmup):
        execute_protocol(parsed, prover, verifier, seeds)
    prover_times, verifier_times = [], []
    for _ in range(repeats):
        run = execute_protocol(parsed, prover, verifier, seeds)
        prover_times.append(run.prover_seconds)
        verifier_times.append(run.verifier_seconds)
    return {
        "prover_seconds": float(np.median(prover_times)),
        "verifier_seconds": float(np.median(verifier_times)),
    }


def cmd_bench(config: RunConfig) -> int:
    """Median timings along a size ladder plus log-log slope estimates."""
    if config.problem is None:
        raise ConfigurationError("--problem is required for bench")
    ladder = config.ladder or get_ladder(config.problem)
    if not ladder:
        raise ConfigurationError(f"no ladder configured for {config.problem}")
    repeats, warmup = BENCH_CONFIG["repeats"], BENCH_CONFIG["warmup"]

    rows = []
    for index, n in enumerate(ladder):
        sizes = bench_sizes(config.problem, n)
        check_generator_sizes(config.problem, sizes)
        tag, instance = generate_instance(config.problem, derive_seed(config.seed, index), sizes)
        parsed = parse_instance_text(serialize_instance(tag, instance))
        start = time.perf_counter()
        timings = time_protocol(parsed, repeats, warmup, (config.prover_seed, config.verifier_seed))
        row = {"n": n, **timings, "repeats": repeats}
        proof_logger.log_bench({**row, "problem": tag, "wall": time.perf_counter() - start})
        rows.append(row)

    table = bench_table(rows)
    slopes = loglog_slopes(table)
    print(format_table(table))
    print(f"prover_slope: {slopes['prover_slope']:.3f}")
    print(f"verifier_slope: {slopes['verifier_slope']:.3f}")
    if config.output_path:
        export_table(table, config.output_path, sheet_name="bench")
    return ExitCode.CANONICAL


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "gen": cmd_gen,
    "prove": cmd_prove,
    "verify": cmd_verify,
    "attack": cmd_attack,
    "oracle": cmd_oracle,
    "bench": cmd_bench,
}


def run_command(name: str, config: RunConfig) -> int:
    """Dispatch one subcommand; library and I/O errors map to exit code 3."""
    proof_logger.log_session_start(name)
    try:
        code = COMMANDS[name](config)
    except (ProofSystemError, OSError, ValueError, ArithmeticError) as exc:
        logger.error("%s failed: %s", name, exc)
        print(f"error: {exc}")
        code = ExitCode.ERROR
    proof_logger.log_session_end({"command": name, "exit_code": code, **run_history.get_session_summary()})
    return code
