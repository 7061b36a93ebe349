"""
config.py
-----------------
Configuration of seeds, limits and parameters for the proof system
"""

import copy
import json
import logging
import os
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

# ===== PROTOCOL CONFIGURATION =====
PROTOCOL_CONFIG = {
    "prover_seed": 0xC0FFEE,          # Default prover seed
    "verifier_seed": 0xB07,           # Default verifier seed
    "prime_retry_cap": 64,            # Oversized primes in a row before giving up
    "min_prime_pool": 16,             # Floor on the 3-SUM / ZWT prime pool
    "threesum_magnitude_exponent": 3, # |entry| < max(n, 16) ** exponent
    "ov_error_exponent": 2,           # OV soundness error n ** -exponent
    "fomc_max_quantifiers": 4,
    "kclique_max_k": 4
}

# ===== HARNESS CONFIGURATION =====
HARNESS_CONFIG = {
    "trials": 100,                    # Default trials per policy
    "workers": 1,                     # Threads for concurrent trials
    "alternatives": 8,                # Wrong solutions offered to flip-solution-block
    "policies": [
        "flip-solution-block",
        "truncate-certificate",
        "swap-certificate-entries",
        "replace-prime",
        "inflate-count",
        "tamper-coefficients",
        "echo-honest"
    ]
}

# ===== ORACLE LIMITS =====
DESK_SCALE_LIMITS = {
    "lp": {"m": 8, "n": 8},
    "threesum": {"n": 64},
    "hittingset": {"m": 400},
    "ov": {"n": 32, "d": 16},
    "zwt": {"n": 24},
    "fomc": {"n": 10, "k": 4},
    "kclique": {"n": 16, "k": 4}
}

# ===== GENERATOR LIMITS =====
GENERATOR_LIMITS = {
    "lp": {"m": 12, "n": 12, "range": 100},
    "threesum": {"n": 1 << 14},
    "hittingset": {"n": 1 << 12, "universe": 1 << 14, "set_size": 64},
    "ov": {"n": 256, "d": 32},
    "zwt": {"n": 128},
    "fomc": {"n": 16},
    "kclique": {"n": 32, "k": 4}
}

# ===== BENCHMARK CONFIGURATION =====
BENCH_CONFIG = {
    "repeats": 5,                     # Timed runs per size; the median is reported
    "warmup": 1,                      # Discarded runs per size
    "ladders": {
        "threesum": [1 << 10, 1 << 11, 1 << 12, 1 << 13],
        "hittingset": [64, 128, 256, 512],
        "ov": [8, 16, 32, 64],
        "zwt": [8, 16, 32, 64],
        "lp": [4, 6, 8, 10, 12],
        "fomc": [4, 6, 8],
        "kclique": [8, 12, 16]
    }
}

# ===== LOGGING CONFIGURATION =====
LOGGING_CONFIG = {
    "level": "INFO",
    "log_dir": "log",
    "max_bytes": 10 * 1024 * 1024,
    "backup_count": 5
}

# ===== OUTPUT CONFIGURATION =====
OUTPUT_CONFIG = {
    "history_dir": "output/run_history",
    "report_dir": "output/reports"
}

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
SETTINGS_PATH = os.path.join(PROJECT_ROOT, "config", "setting.json")

_SECTIONS = {
    "protocol": PROTOCOL_CONFIG,
    "harness": HARNESS_CONFIG,
    "desk_scale_limits": DESK_SCALE_LIMITS,
    "generator_limits": GENERATOR_LIMITS,
    "bench": BENCH_CONFIG,
    "logging": LOGGING_CONFIG,
    "output": OUTPUT_CONFIG
}


# ===== FUNCTION HELPERS =====
def get_protocol_parameters():
    """ProtocolParameters built from PROTOCOL_CONFIG"""
    from ..processing_layer.proof_core.protocol_config import ProtocolParameters
    return ProtocolParameters.from_mapping(PROTOCOL_CONFIG)


def get_default_seeds() -> tuple:
    return PROTOCOL_CONFIG["prover_seed"], PROTOCOL_CONFIG["verifier_seed"]


def get_ladder(problem: str) -> list:
    return list(BENCH_CONFIG["ladders"].get(problem, []))


def snapshot() -> Dict[str, Any]:
    """Deep copy of every section, keyed as in setting.json"""
    return {name: copy.deepcopy(section) for name, section in _SECTIONS.items()}


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """Merge overrides from a JSON settings file into the module dictionaries.

    Unknown sections are ignored with a warning; a missing file is not an error.
    """
    path = path or SETTINGS_PATH
    if not os.path.exists(path):
        return snapshot()
    with open(path, "r", encoding="utf-8") as f:
        overrides = json.load(f)
    for name, values in overrides.items():
        section = _SECTIONS.get(name)
        if section is None or not isinstance(values, dict):
            logger.warning("ignoring settings section %r", name)
            continue
        for key, value in values.items():
            if isinstance(section.get(key), dict) and isinstance(value, dict):
                section[key].update(value)
            else:
                section[key] = value
    return snapshot()


# ===== VALIDATION =====
def validate_config():
    """Validate configuration settings"""
    errors = []

    # Protocol
    for key in ("prime_retry_cap", "min_prime_pool", "threesum_magnitude_exponent",
                "ov_error_exponent", "fomc_max_quantifiers", "kclique_max_k"):
        value = PROTOCOL_CONFIG.get(key)
        if not isinstance(value, int) or value < 1:
            errors.append(f"PROTOCOL {key} must be a positive integer")
    if PROTOCOL_CONFIG.get("kclique_max_k", 0) < 3:
        errors.append("PROTOCOL kclique_max_k must be >= 3")
    for key in ("prover_seed", "verifier_seed"):
        if not isinstance(PROTOCOL_CONFIG.get(key), int) or PROTOCOL_CONFIG[key] < 0:
            errors.append(f"PROTOCOL {key} must be a non-negative integer")

    # Harness
    if HARNESS_CONFIG["trials"] < 1:
        errors.append("HARNESS trials must be >= 1")
    if HARNESS_CONFIG["workers"] < 1:
        errors.append("HARNESS workers must be >= 1")

    # Bench
    if BENCH_CONFIG["repeats"] < 5:
        errors.append("BENCH repeats must be >= 5")
    if BENCH_CONFIG["warmup"] < 0:
        errors.append("BENCH warmup must be >= 0")
    for problem, ladder in BENCH_CONFIG["ladders"].items():
        limit = GENERATOR_LIMITS.get(problem, {}).get("n")
        if limit is not None and any(size > limit for size in ladder):
            errors.append(f"BENCH ladder for {problem} exceeds the generator limit {limit}")

    # Limits
    for name, limits in (("DESK_SCALE_LIMITS", DESK_SCALE_LIMITS), ("GENERATOR_LIMITS", GENERATOR_LIMITS)):
        for problem, bounds in limits.items():
            if any(not isinstance(v, int) or v < 1 for v in bounds.values()):
                errors.append(f"{name} for {problem} must be positive integers")

    if errors:
        raise ValueError(f"Configuration errors: {'; '.join(errors)}")

    return True
