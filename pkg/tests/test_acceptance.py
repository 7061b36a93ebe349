"""
Acceptance-size suites: oracle agreement, single-field certificate
mutations, OV soundness rates, exact counts, the prime pool bound, scaling
and seed independence. All marked slow.
"""

import numpy as np
import pytest

from src.app.main import bench_sizes, time_protocol
from src.input_layer.instance_generator import InstanceGenerator, generate_instance
from src.output_layer.reports import bench_table, loglog_slopes
from src.processing_layer.algebra.primes import prime_pool
from src.processing_layer.algebra.rational import dot, parse_rational_vector
from src.processing_layer.fine_grained.orthogonal_vectors import ov_certify_counts, orthogonality_counts
from src.processing_layer.fine_grained.threesum import (
    count_mod_p,
    count_mod_p_brute,
    pool_size,
    threesum_oracle,
    threesum_prime_pool_profile,
)
from src.processing_layer.fine_grained.zero_weight_triangle import zwt_count_mod_p, zwt_count_mod_p_brute
from src.processing_layer.lp_proof.size_bound import compute_size_bound, perturb_objective
from src.processing_layer.proof_core.adversary import AdversaryPolicy, single_field_mutations
from src.processing_layer.proof_core.codec import encode_section
from src.processing_layer.proof_core.composer import LexSearchSpec, compose_lex_first
from src.processing_layer.proof_core.harness import run_trials
from src.processing_layer.proof_core.protocol import decide_safely
from src.processing_layer.proof_core.protocol_enums import MutationKind, RejectReason, Role
from src.processing_layer.proof_core.randomness import RandomStream, derive_seed
from src.processing_layer.proof_core.registry import (
    build_pair,
    canonical_solution,
    parse_instance_text,
    serialize_instance,
)

pytestmark = pytest.mark.slow

# (tag, size overrides); kclique runs for k = 3 and k = 4
PROBLEMS = [
    ("lp", {"m": 4, "n": 4}),
    ("threesum", {}),
    ("hittingset", {}),
    ("ov", {}),
    ("zwt", {}),
    ("fomc", {}),
    ("kclique", {"k": 3}),
    ("kclique", {"k": 4}),
]
DETERMINISTIC = [("threesum", {}), ("hittingset", {}), ("zwt", {}), ("lp", {"m": 3, "n": 3}), ("fomc", {})]
MUTATION_DELTAS = (-2, -1, 1, 2, 3)


def parsed_instance(tag, seed, sizes=None, planted=False):
    return parse_instance_text(serialize_instance(*generate_instance(tag, seed, sizes, planted)))


def honest_run(parsed, prover_seed=0, verifier_seed=0):
    prover, verifier = build_pair(parsed)
    lines = prover.first_message(parsed.instance, RandomStream(prover_seed, Role.PROVER))
    return lines, decide_safely(verifier, parsed.instance, lines, RandomStream(verifier_seed, Role.VERIFIER))


def ids(problems):
    return [f"{tag}-k{sizes['k']}" if "k" in sizes else tag for tag, sizes in problems]


class TestOracleAgreement:
    @pytest.mark.parametrize("tag, sizes", PROBLEMS, ids=ids(PROBLEMS))
    def test_honest_protocol_matches_oracle(self, tag, sizes):
        for seed in range(200):
            parsed = parsed_instance(tag, derive_seed(101, seed), sizes, planted=seed % 2 == 0)
            _, outcome = honest_run(parsed, prover_seed=seed, verifier_seed=seed + 1)
            expected = canonical_solution(parsed)
            if expected is None:
                assert outcome.is_bot and outcome.certified, (tag, seed)
            else:
                assert outcome.solution == expected, (tag, seed)

    def test_lp_duality_gap_on_accepted_certificates(self):
        for seed in range(200):
            m, n = 1 + seed % 5, 1 + (seed // 5) % 5
            parsed = parsed_instance("lp", derive_seed(7, seed), {"m": m, "n": n}, planted=seed % 3 != 0)
            lines, outcome = honest_run(parsed)
            assert outcome.solution == canonical_solution(parsed), seed
            if outcome.is_canonical:
                lp, message = parsed.instance, dict(lines)
                x = parse_rational_vector(message["solution"], lp.n)
                y = parse_rational_vector(message["dual"], lp.m)
                objective = perturb_objective(lp, compute_size_bound(lp))
                assert dot(objective, x) == dot(lp.b, y), seed

    def test_composer_matches_enumeration(self):
        rng = np.random.default_rng(2024)
        for case in range(200):
            k = int(rng.integers(1, 5))
            domains = [tuple(sorted(rng.choice(6, size=int(rng.integers(1, 4)), replace=False).tolist()))
                       for _ in range(k)]
            product = [()]
            for domain in domains:
                product = [t + (z,) for t in product for z in domain]
            solutions = {t for t in product if rng.random() < 0.2}
            spec = LexSearchSpec.from_relation("toy", domains, lambda _, y, s=frozenset(solutions): y in s)
            pair = compose_lex_first(spec)
            lines = pair.prover.first_message(None, RandomStream(case, Role.PROVER))
            outcome = decide_safely(pair.verifier, None, lines, RandomStream(case, Role.VERIFIER))
            if solutions:
                assert outcome.solution == " ".join(map(str, min(solutions))), case
            else:
                assert outcome.reason == RejectReason.NO_SOLUTION.value and outcome.certified, case


class TestCertificateMutations:
    @pytest.mark.parametrize("tag, sizes", DETERMINISTIC, ids=ids(DETERMINISTIC))
    def test_single_field_mutations_never_accept_another_answer(self, tag, sizes):
        tried, seed = 0, 0
        while tried < 1000:
            parsed = parsed_instance(tag, derive_seed(303, seed), sizes, planted=seed % 2 == 0)
            expected = canonical_solution(parsed)
            honest, _ = honest_run(parsed)
            _, verifier = build_pair(parsed)
            for index, lines in enumerate(single_field_mutations(honest, MUTATION_DELTAS)):
                outcome = decide_safely(verifier, parsed.instance, lines, RandomStream(index, Role.VERIFIER))
                assert outcome.is_bot or outcome.solution == expected, (tag, seed, lines)
                tried += 1
            seed += 1


class TestOvSoundness:
    def test_tampered_coefficients_rate(self):
        parsed = parse_instance_text(serialize_instance("ov", InstanceGenerator(8).ov(8, 4, planted=True)))
        report = run_trials(parsed, AdversaryPolicy(MutationKind.TAMPER_COEFFICIENTS, seed=5), 2000, seed=6)
        epsilon = 8 ** -2
        assert report.soundness_error <= 2 * epsilon
        assert report.canonical + report.non_canonical + report.bot == 2000

    def test_honest_completeness(self):
        parsed = parse_instance_text(serialize_instance("ov", InstanceGenerator(9).ov(8, 4, planted=True)))
        assert run_trials(parsed, None, 200, seed=10).completeness >= 0.99


class TestCountExactness:
    def test_threesum_counts(self):
        generator = InstanceGenerator(41)
        rng = np.random.default_rng(41)
        for _ in range(100):
            inst = generator.threesum(int(rng.integers(2, 20)), magnitude=200)
            pool = prime_pool(pool_size(inst.n))
            p = pool[int(rng.integers(len(pool)))]
            assert count_mod_p(*inst.arrays, p) == count_mod_p_brute(inst.a, inst.b, inst.c, p)

    def test_zwt_counts(self):
        generator = InstanceGenerator(42)
        rng = np.random.default_rng(42)
        for _ in range(100):
            inst = generator.zwt(int(rng.integers(3, 12)), weight=50)
            pool = prime_pool(pool_size(inst.n))
            p = pool[int(rng.integers(len(pool)))]
            assert zwt_count_mod_p(inst, p) == zwt_count_mod_p_brute(inst, p)

    def test_ov_counts(self):
        generator = InstanceGenerator(43)
        for seed in range(100):
            inst = generator.ov(2 + seed % 9, 1 + seed % 5)
            assert ov_certify_counts(inst, seed, seed + 1) == orthogonality_counts(inst.vectors)


class TestPrimePool:
    def test_most_primes_under_threshold(self):
        generator = InstanceGenerator(64)
        profiled = 0
        for _ in range(400):
            inst = generator.threesum(32, magnitude=16000)
            if threesum_oracle(inst) is not None:
                continue
            assert threesum_prime_pool_profile(inst).fraction_under_threshold >= 0.5
            profiled += 1
            if profiled == 50:
                break
        assert profiled == 50


class TestScaling:
    def test_threesum_verifier_work_grows_slower(self):
        ladder = [1 << e for e in range(10, 14)]
        # prover scans every (i, j); verifier convolves histograms of length < largest pool prime
        rows = [
            {"n": n, "prover_seconds": float(n * n), "verifier_seconds": float(prime_pool(pool_size(n))[-1])}
            for n in ladder
        ]
        slopes = loglog_slopes(bench_table(rows))
        assert slopes["prover_slope"] == pytest.approx(2.0)
        assert slopes["verifier_slope"] <= slopes["prover_slope"] - 0.3

    def test_hitting_set_verifier_is_linear(self):
        rows = []
        for index, n in enumerate(1 << e for e in range(9, 13)):
            _, instance = generate_instance("hittingset", derive_seed(5, index), bench_sizes("hittingset", n))
            parsed = parse_instance_text(serialize_instance("hittingset", instance))
            rows.append({"n": n, **time_protocol(parsed, repeats=5, warmup=1, seeds=(1, 2))})
        slope = loglog_slopes(bench_table(rows))["verifier_slope"]
        assert 0.7 <= slope <= 1.3


class TestSeedIndependence:
    @pytest.mark.parametrize("tag, sizes", PROBLEMS, ids=ids(PROBLEMS))
    def test_payload_identical_across_seeds(self, tag, sizes):
        for index in range(20):
            parsed = parsed_instance(tag, derive_seed(909, index), sizes, planted=index % 2 == 0)
            payloads = {
                encode_section(honest_run(parsed, prover_seed=seed, verifier_seed=derive_seed(seed, 1))[1].to_lines())
                for seed in range(20)
            }
            assert len(payloads) == 1, (tag, index)
