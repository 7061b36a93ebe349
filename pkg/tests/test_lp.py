"""
Tests for the LP proof: size bound, perturbation, exact simplex,
lexicographic oracle and the prover/verifier pair.
"""

from fractions import Fraction

import pytest

from src.input_layer.instance_generator import InstanceGenerator
from src.processing_layer.algebra.rational import dot, mat_vec, transpose_mat_vec
from src.processing_layer.errors import InstanceParseError
from src.processing_layer.lp_proof.lex_oracle import lex_greatest_oracle
from src.processing_layer.lp_proof.lp_protocol import lp_oracle, lp_prover, lp_psd, lp_verifier
from src.processing_layer.lp_proof.lp_types import Infeasible, LpInstance, Optimal, SizeBound, Unbounded
from src.processing_layer.lp_proof.simplex import solve_lp
from src.processing_layer.lp_proof.size_bound import compute_size_bound, perturb_objective
from src.processing_layer.proof_core.codec import SectionReader
from src.processing_layer.proof_core.protocol import decide_safely
from src.processing_layer.proof_core.protocol_enums import RejectReason, Role
from src.processing_layer.proof_core.randomness import RandomStream
from src.processing_layer.proof_core.registry import instance_digest, parse_instance_text, serialize_instance


def lp(A, b, c):
    return LpInstance.from_lists(A, b, c)


def verify(instance, lines):
    _, verifier = lp_psd()
    return decide_safely(verifier, instance, lines, RandomStream(0, Role.VERIFIER))


def replace(lines, key, value):
    return [(k, value if k == key else v) for k, v in lines]


class TestSizeBound:
    @pytest.mark.parametrize(
        "A, b, c, L",
        [([[1]], [1], [1], 2), ([[2]], [1], [1], 3), ([[1, 0], [0, 1]], [1, 1], [1, 1], 5)],
    )
    def test_examples(self, A, b, c, L):
        assert compute_size_bound(lp(A, b, c)).L == L

    def test_epsilon(self):
        assert SizeBound(2).epsilon == Fraction(1, 2**8)
        assert SizeBound(3).epsilon == Fraction(1, 2**11)

    def test_bound_covers_dimensions(self):
        instance = lp([[0, 0, 0]] * 4, [0] * 4, [0] * 3)
        assert compute_size_bound(instance).L >= instance.m + instance.n


class TestPerturbation:
    def test_single_variable(self):
        assert perturb_objective(lp([[1]], [1], [1]), SizeBound(2)) == [Fraction(257, 256)]

    def test_powers_of_epsilon(self):
        c_prime = perturb_objective(lp([[1, 1]], [1], [1, 1]), SizeBound(5))
        assert c_prime == [1 + Fraction(1, 2**17), 1 + Fraction(1, 2**34)]


class TestSimplex:
    def test_optimal_with_dual(self):
        result = solve_lp(lp([[1, 1]], [1], [1, 1]))
        assert isinstance(result, Optimal)
        assert result.value == 1
        assert result.y == (1,)

    def test_infeasible_farkas(self):
        result = solve_lp(lp([[1]], [-1], [1]))
        assert isinstance(result, Infeasible)
        y = result.certificate.y
        assert all(v >= 0 for v in y)
        assert all(v >= 0 for v in transpose_mat_vec([[1]], y))
        assert dot([-1], y) < 0

    def test_unbounded_ray(self):
        result = solve_lp(lp([[0]], [0], [1]))
        assert isinstance(result, Unbounded)
        ray = result.certificate.ray
        assert ray[0] > 0
        assert mat_vec([[0]], ray) == [0]

    def test_strong_duality_on_random_programs(self):
        generator = InstanceGenerator(17)
        for _ in range(10):
            instance = generator.lp(4, 4, planted=True)
            result = solve_lp(instance)
            if isinstance(result, Optimal):
                assert dot(instance.c, result.x) == dot(instance.b, result.y)
                assert all(lhs <= b for lhs, b in zip(mat_vec(instance.A, result.x), instance.b))
            else:
                assert isinstance(result, Unbounded)


class TestLexOracle:
    @pytest.mark.parametrize(
        "A, b, c, expected",
        [
            ([[1, 1]], [1], [1, 1], (1, 0)),
            ([[1]], [5], [0], (5,)),
            ([[1, 0], [0, 1]], [3, 2], [1, 0], (3, 2)),
        ],
    )
    def test_examples(self, A, b, c, expected):
        assert lex_greatest_oracle(lp(A, b, c)) == tuple(Fraction(v) for v in expected)

    def test_infeasible_and_unbounded(self):
        assert lex_greatest_oracle(lp([[1]], [-1], [1])) is None
        assert lex_greatest_oracle(lp([[0]], [0], [1])) is None


class TestLpProtocol:
    def test_honest_segment(self):
        instance = lp([[1, 1]], [1], [1, 1])
        outcome = verify(instance, lp_prover(instance))
        assert outcome.is_canonical
        assert outcome.solution == "1 0"

    def test_perturbation_pushes_to_bounds(self):
        assert verify(lp([[1]], [5], [0]), lp_prover(lp([[1]], [5], [0]))).solution == "5"
        instance = lp([[1, 0], [0, 1]], [3, 2], [1, 0])
        assert verify(instance, lp_prover(instance)).solution == "3 2"

    def test_non_lex_greatest_vertex_rejected(self):
        instance = lp([[1, 1]], [1], [1, 1])
        lines = replace(lp_prover(instance), "solution", "0 1")
        assert verify(instance, lines).reason == RejectReason.DUALITY_GAP.value

    def test_negative_dual_rejected(self):
        instance = lp([[1, 1]], [1], [1, 1])
        lines = replace(lp_prover(instance), "dual", "-1")
        assert verify(instance, lines).reason == RejectReason.DUAL_INFEASIBLE.value

    def test_infeasible_point_rejected(self):
        instance = lp([[1, 1]], [1], [1, 1])
        lines = replace(lp_prover(instance), "solution", "2 0")
        assert verify(instance, lines).reason == RejectReason.PRIMAL_INFEASIBLE.value

    def test_size_bound_echo(self):
        instance = lp([[1, 1]], [1], [1, 1])
        lines = replace(lp_prover(instance), "size-bound", "99")
        assert verify(instance, lines).reason == RejectReason.SIZE_BOUND.value

    def test_infeasible_program(self):
        instance = lp([[1]], [-1], [1])
        lines = lp_prover(instance)
        assert dict(lines)["kind"] == "infeasible"
        outcome = verify(instance, lines)
        assert outcome.is_bot and outcome.certified
        assert outcome.reason == RejectReason.INFEASIBLE.value
        forged = replace(lines, "farkas", "0")
        assert verify(instance, forged).reason == RejectReason.BAD_CERTIFICATE.value

    def test_unbounded_program(self):
        instance = lp([[0]], [0], [1])
        outcome = verify(instance, lp_prover(instance))
        assert outcome.is_bot and outcome.certified
        assert outcome.reason == RejectReason.UNBOUNDED.value

    @pytest.mark.parametrize("text", ["1/0 0", "0.5 0", "1 0 0", "a b"])
    def test_malformed_rationals(self, text):
        instance = lp([[1, 1]], [1], [1, 1])
        assert verify(instance, replace(lp_prover(instance), "solution", text)).reason == "malformed"

    def test_verifier_function_directly(self):
        instance = lp([[1, 1]], [1], [1, 1])
        outcome = lp_verifier(instance, SectionReader(lp_prover(instance)))
        assert outcome.solution == "1 0"

    def test_matches_lex_oracle_on_random_programs(self):
        generator = InstanceGenerator(5)
        for _ in range(8):
            instance = generator.lp(3, 3, planted=True)
            outcome = verify(instance, lp_prover(instance))
            expected = lp_oracle(instance)
            if expected is None:
                assert outcome.is_bot
            else:
                assert outcome.solution == expected


class TestLpInstanceText:
    def test_parse(self):
        parsed = parse_instance_text("problem: lp\nm: 1\nn: 2\nA: 1 1\nb: 1\nc: 1 1\n")
        assert parsed.instance == lp([[1, 1]], [1], [1, 1])
        assert parsed.digest == instance_digest("lp", parsed.instance)
        assert serialize_instance("lp", parsed.instance).startswith("problem: lp\nm: 1\nn: 2\n")

    def test_shape_errors(self):
        with pytest.raises(InstanceParseError):
            parse_instance_text("problem: lp\nm: 2\nn: 2\nA: 1 1\nb: 1 1\nc: 1 1\n")
        with pytest.raises(InstanceParseError):
            parse_instance_text("problem: lp\nm: 1\nn: 2\nA: 1 1\nb: 1\nc: 1\n")
