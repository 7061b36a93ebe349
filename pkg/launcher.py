#!/usr/bin/env python3
"""
launcher.py

Command-line launcher for the pseudo-deterministic proof system.
Subcommands: gen, prove, verify, attack, oracle, bench
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to Python path
PROJECT_ROOT = Path(__file__).parent.absolute()
sys.path.insert(0, str(PROJECT_ROOT))

SIZE_FLAGS = ("n", "m", "d", "k", "universe", "set_size", "range")


def setup_directories():
    """Create log and output directories"""
    for subdir in ["log", "output/run_history", "output/reports"]:
        (PROJECT_ROOT / subdir).mkdir(parents=True, exist_ok=True)


def _seed(text: str) -> int:
    """Accept decimal or 0x-prefixed seeds"""
    return int(text, 0)


def _ladder(text: str) -> List[int]:
    return [int(part) for part in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Doubly-efficient pseudo-deterministic proofs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="exit codes: 0 canonical, 2 bot, 3 error",
    )
    parser.add_argument("--settings", help="JSON settings file (default config/setting.json)")
    parser.add_argument("--quiet", "-q", action="store_true", help="Errors only on the console")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", help="Problem tag (lp, threesum, hittingset, ov, zwt, fomc, kclique)")
    common.add_argument("--in", dest="input_path", help="Instance file")
    common.add_argument("--out", dest="output_path", help="Output file")
    common.add_argument("--seed", type=_seed, default=0, help="Generator / harness seed")
    common.add_argument("--prover-seed", type=_seed, help="Prover seed")
    common.add_argument("--verifier-seed", type=_seed, help="Verifier seed")
    common.add_argument("--verbose", "-v", action="store_true")

    gen = sub.add_parser("gen", parents=[common], help="Generate a random instance")
    gen.add_argument("--planted", action="store_true", help="Plant one solution")
    for flag in SIZE_FLAGS:
        gen.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=int)

    sub.add_parser("prove", parents=[common], help="Run the honest protocol")

    verify = sub.add_parser("verify", parents=[common], help="Replay a transcript")
    verify.add_argument("--transcript", dest="transcript_path", required=True)

    attack = sub.add_parser("attack", parents=[common], help="Run adversary policies")
    attack.add_argument("--trials", type=int)
    attack.add_argument("--policy", help="One policy; every configured policy when omitted")
    attack.add_argument("--workers", type=int)

    sub.add_parser("oracle", parents=[common], help="Brute-force canonical solution")

    bench = sub.add_parser("bench", parents=[common], help="Scaling benchmark")
    bench.add_argument("--ladder", type=_ladder, help="Sizes, e.g. '8,16,32'")
    return parser


def config_from_args(args: argparse.Namespace):
    from src.app.main import RunConfig

    options = {
        "problem": args.problem,
        "input_path": args.input_path,
        "output_path": args.output_path,
        "seed": args.seed,
        "verbose": args.verbose,
        "transcript_path": getattr(args, "transcript_path", None),
        "policy": getattr(args, "policy", None),
        "planted": getattr(args, "planted", False),
        "ladder": getattr(args, "ladder", None) or [],
        "sizes": {flag: getattr(args, flag) for flag in SIZE_FLAGS if getattr(args, flag, None) is not None},
    }
    for name in ("prover_seed", "verifier_seed", "trials", "workers"):
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    return RunConfig(**options)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    from src.app.config import LOGGING_CONFIG, load_settings, validate_config
    from src.app.main import ExitCode, run_command

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on bad usage; 2 is reserved for Bot
        return ExitCode.CANONICAL if e.code == 0 else ExitCode.ERROR

    from src.output_layer.logger import proof_logger
    from src.processing_layer.errors import ProofSystemError

    try:
        load_settings(args.settings)
        validate_config()
    except (OSError, ValueError) as e:
        print(f"error: {e}")
        return ExitCode.ERROR

    setup_directories()
    proof_logger.log_dir = str(PROJECT_ROOT / LOGGING_CONFIG["log_dir"])
    proof_logger.log_level = "ERROR" if args.quiet else LOGGING_CONFIG["level"]
    proof_logger.max_log_size = LOGGING_CONFIG["max_bytes"]
    proof_logger.backup_count = LOGGING_CONFIG["backup_count"]
    proof_logger.setup()

    try:
        try:
            config = config_from_args(args)
        except ProofSystemError as e:
            print(f"error: {e}")
            return ExitCode.ERROR
        return run_command(args.command, config)
    except KeyboardInterrupt:
        print("\ninterrupted")
        return ExitCode.ERROR
    finally:
        proof_logger.close()


if __name__ == "__main__":
    sys.exit(main())
