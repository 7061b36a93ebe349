"""
Tests for the 3-SUM protocols: mod-p counting, the nonexistence
certificate, the prime pool profile and the full prover/verifier pair.
"""

import numpy as np
import pytest

from src.input_layer.instance_generator import InstanceGenerator
from src.processing_layer.errors import InstanceParseError, RetryExhaustedError
from src.processing_layer.fine_grained.instances import ThreeSumInstance
from src.processing_layer.fine_grained.threesum import (
    ModPNonexistenceCert,
    ceil_n_three_halves,
    count_mod_p,
    count_mod_p_brute,
    false_positive_threshold,
    find_first_triple,
    pool_size,
    threesum_nonexistence_prove,
    threesum_nonexistence_verify,
    threesum_oracle,
    threesum_prime_pool_profile,
    threesum_psd,
)
from src.processing_layer.proof_core.protocol import decide_safely
from src.processing_layer.proof_core.protocol_config import ProtocolParameters
from src.processing_layer.proof_core.protocol_enums import RejectReason, Role
from src.processing_layer.proof_core.randomness import RandomStream


def instance(a, b, c):
    return ThreeSumInstance.from_lists(a, b, c)


def run(inst, lines=None, prover_seed=0, verifier_seed=0):
    prover, verifier = threesum_psd()
    if lines is None:
        lines = prover.first_message(inst, RandomStream(prover_seed, Role.PROVER))
    return decide_safely(verifier, inst, lines, RandomStream(verifier_seed, Role.VERIFIER))


def honest(inst, seed=0):
    prover, _ = threesum_psd()
    return prover.first_message(inst, RandomStream(seed, Role.PROVER))


class TestParameters:
    def test_three_halves(self):
        assert ceil_n_three_halves(4) == 8
        assert ceil_n_three_halves(2) == 3
        assert ceil_n_three_halves(100) == 1000

    def test_pool_floor(self):
        assert pool_size(1) == 16
        assert pool_size(100) == 1000

    def test_threshold(self):
        assert false_positive_threshold(1) == 1
        assert false_positive_threshold(4) == 32

    def test_magnitude_bound(self):
        with pytest.raises(InstanceParseError):
            instance([16**3], [0], [0])
        assert instance([16**3 - 1], [0], [0]).n == 1


class TestCounting:
    def test_matches_brute_force(self):
        rng = np.random.default_rng(2)
        for n in (1, 5, 20):
            a, b, c = (rng.integers(-200, 200, size=n) for _ in range(3))
            for p in (2, 3, 5, 7, 53):
                assert count_mod_p(a, b, c, p) == count_mod_p_brute(a, b, c, p)

    def test_single_triple_examples(self):
        one = np.array([1])
        assert count_mod_p(one, one, one, 2) == 0
        assert count_mod_p(one, one, np.array([-3]), 2) == 0
        assert count_mod_p(one, one, np.array([3]), 5) == 1


class TestNonexistenceCertificate:
    def test_honest_certificate_accepted(self):
        inst = instance([1, 2, 7], [1, 5, 9], [1, 4, 11])
        cert = threesum_nonexistence_prove(inst, RandomStream(4, Role.PROVER))
        assert cert.count == len(cert.triples)
        assert threesum_nonexistence_verify(inst, cert)

    def test_false_positive_listed(self):
        # 1 + 1 + 3 = 5 vanishes mod 5 only
        inst = instance([1], [1], [3])
        cert = ModPNonexistenceCert(5, 1, ((0, 0, 0),))
        assert threesum_nonexistence_verify(inst, cert)
        assert threesum_nonexistence_verify(inst, ModPNonexistenceCert(2, 0, ()))

    def test_dropped_triple_rejected(self):
        inst = instance([1], [1], [3])
        check = threesum_nonexistence_verify(inst, ModPNonexistenceCert(5, 0, ()))
        assert not check and check.reason is RejectReason.BAD_COUNT

    def test_true_solution_in_list_rejected(self):
        inst = instance([1, 0], [2, 0], [-3, 1])
        cert = ModPNonexistenceCert(3, 3, ((0, 0, 0), (1, 0, 1), (1, 1, 0)))
        assert threesum_nonexistence_verify(inst, cert).reason is RejectReason.BAD_WITNESS

    def test_prime_outside_pool(self):
        inst = instance([1], [1], [1])
        assert threesum_nonexistence_verify(inst, ModPNonexistenceCert(4, 0, ())).reason is RejectReason.BAD_PRIME
        # the pool for n = 1 ends at 53
        assert threesum_nonexistence_verify(inst, ModPNonexistenceCert(101, 0, ())).reason is RejectReason.BAD_PRIME

    def test_unsorted_list_rejected(self):
        inst = instance([1, 1], [1, 1], [3, 3])
        cert = ModPNonexistenceCert(5, 2, ((0, 0, 1), (0, 0, 0)))
        assert threesum_nonexistence_verify(inst, cert).reason is RejectReason.BAD_ORDER

    def test_retry_cap(self):
        # pool {2, 3, 5}: every sum is 30, so every prime exceeds the threshold
        params = ProtocolParameters(min_prime_pool=1, prime_retry_cap=3)
        inst = instance([10, 10], [10, 10], [10, 10])
        with pytest.raises(RetryExhaustedError):
            threesum_nonexistence_prove(inst, RandomStream(0, Role.PROVER), None, params)


class TestProfile:
    def test_most_primes_under_threshold(self):
        inst = InstanceGenerator(9).threesum(64)
        profile = threesum_prime_pool_profile(inst)
        assert len(profile.primes) == pool_size(64)
        assert profile.fraction_under_threshold >= 0.5


class TestProtocol:
    def test_example_solution(self):
        inst = instance([1, 2], [3, 4], [-4, -5])
        outcome = run(inst)
        assert outcome.is_canonical and outcome.solution == "1 1 1"
        assert threesum_oracle(inst) == "1 1 1"

    @pytest.mark.parametrize("values", [(1,), (5,)])
    def test_no_solution(self, values):
        inst = instance(values, values, values)
        outcome = run(inst)
        assert outcome.is_bot and outcome.certified
        assert outcome.reason == RejectReason.NO_SOLUTION.value

    def test_all_zero(self):
        assert run(instance([0, 0], [0, 0], [0, 0])).solution == "1 1 1"

    def test_truncated_message(self):
        inst = instance([1, 2], [3, 4], [-4, -5])
        assert run(inst, lines=honest(inst)[:1]).reason == RejectReason.MALFORMED.value

    def test_second_solution_rejected(self):
        inst = instance([9, 1, 2], [3, 4, 0], [-4, -5, -2])
        lines = honest(inst)
        assert dict(lines)["solution"] == "2 1 1"
        forged = [("solution", "3 3 3") if k == "solution" else (k, v) for k, v in lines]
        assert run(inst, lines=forged).is_bot

    def test_earlier_in_row_rejected(self):
        inst = instance([1, 0], [3, 3], [-4, 9])
        lines = honest(inst)
        assert dict(lines)["solution"] == "1 1 1"
        forged = [("solution", "1 2 1") if k == "solution" else (k, v) for k, v in lines]
        assert run(inst, lines=forged).reason == RejectReason.EARLIER_SOLUTION.value

    def test_pseudo_determinism_across_seeds(self):
        inst = InstanceGenerator(3).threesum(24, planted=True)
        solutions = {run(inst, prover_seed=s, verifier_seed=s + 1).solution for s in range(10)}
        assert solutions == {threesum_oracle(inst)}

    def test_fast_search_matches_oracle(self):
        generator = InstanceGenerator(21)
        for _ in range(20):
            inst = generator.threesum(10, magnitude=20)
            found = find_first_triple(inst)
            expected = threesum_oracle(inst)
            assert (found is None) == (expected is None)
            if found is not None:
                assert " ".join(str(i + 1) for i in found) == expected
