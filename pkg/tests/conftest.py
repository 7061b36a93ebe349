"""
Shared fixtures for the proof system tests
"""

import copy

import pytest

from src.app import config
from src.output_layer.run_history import run_history
from src.processing_layer.proof_core.registry import parse_instance_text

_SECTIONS = (
    config.PROTOCOL_CONFIG,
    config.HARNESS_CONFIG,
    config.DESK_SCALE_LIMITS,
    config.GENERATOR_LIMITS,
    config.BENCH_CONFIG,
    config.LOGGING_CONFIG,
    config.OUTPUT_CONFIG,
)


@pytest.fixture(autouse=True)
def restore_config():
    """Undo any in-test edits to the module-level config dictionaries."""
    saved = [copy.deepcopy(section) for section in _SECTIONS]
    yield
    for section, original in zip(_SECTIONS, saved):
        section.clear()
        section.update(original)


@pytest.fixture(autouse=True)
def fresh_history():
    run_history.clear_session()
    yield
    run_history.clear_session()


@pytest.fixture
def parse():
    """Parse instance text written as a list of lines."""
    def _parse(*lines: str):
        return parse_instance_text("\n".join(lines) + "\n")
    return _parse


@pytest.fixture
def write_file(tmp_path):
    def _write(name: str, *lines: str):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
    return _write


THREESUM_WITH_SOLUTION = ("problem: threesum", "n: 2", "a: 1 2", "b: 3 4", "c: -4 -5")
THREESUM_WITHOUT_SOLUTION = ("problem: threesum", "n: 1", "a: 5", "b: 5", "c: 5")


@pytest.fixture
def threesum_text():
    return "\n".join(THREESUM_WITH_SOLUTION) + "\n"


@pytest.fixture
def threesum_none_text():
    return "\n".join(THREESUM_WITHOUT_SOLUTION) + "\n"
