"""
Tests for the Hitting Set proof
"""

import pytest

from src.input_layer.instance_generator import InstanceGenerator
from src.processing_layer.errors import InstanceParseError, ProverContractError
from src.processing_layer.fine_grained.hitting_set import (
    hittingset_exists_prove,
    hittingset_nonexistence_prove,
    hittingset_oracle,
    hittingset_psd,
    sorted_disjoint,
)
from src.processing_layer.fine_grained.instances import HittingSetInstance
from src.processing_layer.proof_core.protocol import decide_safely
from src.processing_layer.proof_core.protocol_enums import RejectReason, Role
from src.processing_layer.proof_core.randomness import RandomStream


def instance(S, T):
    return HittingSetInstance.from_lists(S, T)


def honest(inst):
    prover, _ = hittingset_psd()
    return prover.first_message(inst, RandomStream(0, Role.PROVER))


def run(inst, lines=None):
    _, verifier = hittingset_psd()
    return decide_safely(verifier, inst, honest(inst) if lines is None else lines, RandomStream(0, Role.VERIFIER))


def test_sorted_disjoint():
    assert sorted_disjoint([1, 3, 5], [2, 4, 6])
    assert not sorted_disjoint([1, 3, 5], [0, 5])
    assert sorted_disjoint([], [1])


def test_sets_must_be_sorted():
    with pytest.raises(InstanceParseError):
        instance([[2, 1]], [[1]])
    with pytest.raises(InstanceParseError):
        instance([[1, 1]], [[1]])


def test_second_set_hits_everything():
    inst = instance([[1], [2, 3]], [[1, 2], [3]])
    lines = honest(inst)
    assert dict(lines) == {"solution": "2", "hit": "2 3", "miss": "2"}
    outcome = run(inst, lines)
    assert outcome.is_canonical and outcome.solution == "2"


def test_no_target_sets():
    # every candidate trivially hits an empty family
    outcome = run(instance([[1]], []))
    assert outcome.solution == "1"


def test_no_hitting_set_is_certified():
    outcome = run(instance([[1]], [[2]]))
    assert outcome.is_bot and outcome.certified
    assert outcome.reason == RejectReason.NO_SOLUTION.value


def test_bad_hit_rejected():
    inst = instance([[1], [2, 3]], [[1, 2], [3]])
    lines = [("solution", "2"), ("hit", "2 2"), ("miss", "2")]
    assert run(inst, lines).reason == RejectReason.NOT_A_SOLUTION.value


def test_false_miss_rejected():
    inst = instance([[1], [2, 3]], [[1, 2], [3]])
    lines = [("solution", "2"), ("hit", "2 3"), ("miss", "1")]
    assert run(inst, lines).reason == RejectReason.EARLIER_SOLUTION.value


def test_later_candidate_rejected():
    inst = instance([[1, 3], [1, 3]], [[1], [3]])
    lines = [("solution", "2"), ("hit", "1 3"), ("miss", "1")]
    assert run(inst, lines).is_bot


def test_false_none_claim_rejected():
    inst = instance([[1], [2, 3]], [[1, 2], [3]])
    outcome = run(inst, [("solution", "none"), ("miss", "2")])
    assert outcome.is_bot and not outcome.certified


def test_prover_contract():
    inst = instance([[1], [2, 3]], [[1, 2], [3]])
    assert hittingset_exists_prove(inst, 1) == (2, 3)
    with pytest.raises(ProverContractError):
        hittingset_exists_prove(inst, 0)
    with pytest.raises(ProverContractError):
        hittingset_nonexistence_prove(inst, 2)


def test_matches_oracle_on_random_instances():
    generator = InstanceGenerator(8)
    for planted in (False, True) * 10:
        inst = generator.hittingset(6, 10, 3, planted)
        outcome = run(inst)
        expected = hittingset_oracle(inst)
        if expected is None:
            assert outcome.is_bot and outcome.certified
        else:
            assert outcome.solution == expected
