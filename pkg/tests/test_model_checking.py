"""
Tests for first-order formulas and the model-checking proof
"""

import pytest

from src.input_layer.instance_generator import InstanceGenerator
from src.processing_layer.errors import ConfigurationError, FormulaError
from src.processing_layer.fine_grained.fo_formula import Quantifier, parse_formula
from src.processing_layer.fine_grained.instances import Graph
from src.processing_layer.fine_grained.model_checking import (
    FoModelInstance,
    available_checkers,
    modelcheck_oracle,
    modelcheck_psd,
    register_checker,
)
from src.processing_layer.proof_core.composer import SLOW_REFERENCE, brute_force_prefix_check
from src.processing_layer.proof_core.protocol import decide_safely
from src.processing_layer.proof_core.protocol_config import ProtocolParameters
from src.processing_layer.proof_core.protocol_enums import RejectReason, Role
from src.processing_layer.proof_core.randomness import RandomStream


def model(n, edges, formula):
    graph = Graph.from_pairs(n, [(u - 1, v - 1) for u, v in edges])
    return FoModelInstance.with_full_domains(graph, parse_formula(formula))


def run(inst, lines=None, **kwargs):
    pair = modelcheck_psd(inst, **kwargs)
    if lines is None:
        lines = pair.prover.first_message(inst, RandomStream(0, Role.PROVER))
    return decide_safely(pair.verifier, inst, lines, RandomStream(0, Role.VERIFIER))


class TestFormulaParser:
    def test_prefix_and_render(self):
        formula = parse_formula("E x1 A x2 : (x1 = x2 | edge x1 x2)")
        assert formula.k == 2
        assert formula.prefix[1] == (Quantifier.FORALL, "x2")
        assert formula.existential_head == 1
        assert parse_formula(formula.render()) == formula

    def test_precedence(self):
        formula = parse_formula("E x : !true | false & true")
        assert formula.holds([[0]], lambda u, v: False, {}) is False
        assert parse_formula("E x : !(false | false)").holds([[0]], lambda u, v: False, {}) is True

    @pytest.mark.parametrize(
        "text",
        [
            "E x1 E x2 A x3 : true",
            "E x1 E x2 E x3 A x4 : true",
            "A x1 : true",
            "E a E b E c E d E e : true",
            "E x1 : edge x1 y",
            "E x1 E x1 : true",
            "E x1 true",
            "E x1 : (true",
            "Q x1 : true",
            "E x1 : x1 = ",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(FormulaError):
            parse_formula(text)

    def test_short_universal_tail_allowed(self):
        assert parse_formula("E x1 A x2 : true").k == 2
        assert parse_formula("E x1 A x2 E x3 : true").existential_head == 1


class TestProtocol:
    def test_edge_exists(self):
        outcome = run(model(2, [(1, 2)], "E x1 E x2 : edge x1 x2"))
        assert outcome.is_canonical and outcome.solution == "1 2"

    def test_dominating_vertex_on_path(self):
        inst = model(3, [(1, 2), (2, 3)], "E x1 A x2 : (x1 = x2 | edge x1 x2)")
        assert run(inst).solution == "2"
        assert modelcheck_oracle(inst) == "2"

    def test_unsatisfiable_matrix(self):
        outcome = run(model(3, [(1, 2)], "E x1 E x2 : (edge x1 x2 & !edge x1 x2)"))
        assert outcome.is_bot and outcome.certified

    def test_later_block_rejected(self):
        inst = model(3, [(1, 2), (2, 3)], "E x1 E x2 : edge x1 x2")
        pair = modelcheck_psd(inst)
        honest = pair.prover.first_message(inst, RandomStream(0, Role.PROVER))
        forged = [("solution", "2 3") if k == "solution" else (k, v) for k, v in honest]
        assert run(inst, forged).reason == RejectReason.EARLIER_SOLUTION.value

    def test_restricted_domain(self, parse):
        parsed = parse(
            "problem: fomc",
            "n: 3",
            "formula: E x1 E x2 : edge x1 x2",
            "domain: x1 2 3",
            "edge: 1 2",
            "edge: 2 3",
        )
        assert run(parsed.instance).solution == "2 1"

    def test_matches_oracle_on_generated_models(self):
        generator = InstanceGenerator(13)
        for planted in (True, False) * 4:
            inst = generator.fomc(5, planted)
            expected = modelcheck_oracle(inst)
            outcome = run(inst)
            assert outcome.solution == expected if expected else outcome.is_bot

    def test_unknown_checker(self):
        inst = model(2, [(1, 2)], "E x1 E x2 : edge x1 x2")
        with pytest.raises(ConfigurationError):
            modelcheck_psd(inst, checker="fast")

    def test_registered_checker_is_selectable(self):
        register_checker("brute-copy", brute_force_prefix_check)
        assert "brute-copy" in available_checkers()
        assert SLOW_REFERENCE in available_checkers()
        inst = model(2, [(1, 2)], "E x1 E x2 : edge x1 x2")
        assert run(inst, checker="brute-copy").solution == "1 2"

    def test_quantifier_limit(self):
        inst = model(2, [(1, 2)], "E x1 E x2 : edge x1 x2")
        with pytest.raises(ConfigurationError):
            modelcheck_psd(inst, ProtocolParameters(fomc_max_quantifiers=1))
