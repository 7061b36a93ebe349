"""
Tests for report tables, run history and the file logger
"""

import json
import logging
import math

import pandas as pd
import pytest

from src.output_layer.logger import ProofLogger
from src.output_layer.reports import (
    ATTACK_COLUMNS,
    attack_table,
    bench_table,
    export_table,
    format_table,
    loglog_slopes,
)
from src.output_layer.run_history import RunHistory
from src.processing_layer.proof_core.adversary import AdversaryPolicy
from src.processing_layer.proof_core.harness import run_trials
from src.processing_layer.proof_core.protocol_enums import MutationKind


@pytest.fixture
def echo_report(threesum_text):
    return run_trials(threesum_text, AdversaryPolicy(MutationKind.ECHO_HONEST), 4, seed=0).to_dict()


def bench_rows(sizes):
    return [
        {"n": n, "prover_seconds": 1e-6 * n**2, "verifier_seconds": 1e-6 * n, "repeats": 5}
        for n in sizes
    ]


class TestReports:
    def test_attack_table(self, echo_report):
        df = attack_table([echo_report])
        assert list(df.columns) == ATTACK_COLUMNS
        row = df.iloc[0]
        assert row["policy"] == "echo-honest"
        assert (row["trials"], row["canonical"], row["non-canonical-accepts"]) == (4, 4, 0)
        assert "echo-honest" in format_table(df)

    def test_bench_table_sorted(self):
        df = bench_table(bench_rows([64, 8, 16]))
        assert df["n"].tolist() == [8, 16, 64]

    def test_slopes(self):
        slopes = loglog_slopes(bench_table(bench_rows([8, 16, 32, 64])))
        assert slopes["prover_slope"] == pytest.approx(2.0)
        assert slopes["verifier_slope"] == pytest.approx(1.0)

    def test_slopes_need_two_sizes(self):
        slopes = loglog_slopes(bench_table(bench_rows([8, 8])))
        assert math.isnan(slopes["prover_slope"]) and math.isnan(slopes["verifier_slope"])

    @pytest.mark.parametrize("name", ["bench.csv", "bench.json", "bench.xlsx"])
    def test_export(self, tmp_path, name):
        df = bench_table(bench_rows([8, 16]))
        path = export_table(df, str(tmp_path / "reports" / name))
        if name.endswith(".csv"):
            back = pd.read_csv(path)
        elif name.endswith(".json"):
            back = pd.read_json(path, orient="records")
        else:
            back = pd.read_excel(path, sheet_name="report")
        assert back["n"].tolist() == [8, 16]

    def test_export_unknown_extension(self, tmp_path):
        with pytest.raises(ValueError):
            export_table(bench_table(bench_rows([8])), str(tmp_path / "bench.parquet"))


class TestRunHistory:
    RUN = {"problem": "threesum", "verdict": "canonical", "solution": "1 1 1", "prover_seconds": 0.01}

    def test_summary(self, echo_report):
        history = RunHistory()
        history.add_run("prove", self.RUN)
        history.add_run("prove", {"problem": "ov", "verdict": "bot", "reason": "no-solution", "certified": True})
        history.add_report(echo_report)
        summary = history.get_session_summary()
        assert summary["total_runs"] == 2
        assert summary["verdicts"] == {"canonical": 1, "bot": 1}
        assert summary["problems"] == ["ov", "threesum"]
        assert summary["attack_batches"] == 1 and summary["non_canonical_accepts"] == 0
        assert [r.solution for r in history.get_runs_by_problem("threesum")] == ["1 1 1"]

    def test_bounded(self):
        history = RunHistory(max_records=2)
        for _ in range(3):
            history.add_run("prove", self.RUN)
        assert len(history.runs) == 2

    def test_export_json_and_csv(self, tmp_path, echo_report):
        history = RunHistory()
        history.add_run("prove", self.RUN)
        history.add_report(echo_report)
        with open(history.export_session_data("json", str(tmp_path / "s.json")), encoding="utf-8") as f:
            data = json.load(f)
        assert data["runs"][0]["verdict"] == "canonical"
        assert data["attacks"][0]["policy"] == "echo-honest"
        df = pd.read_csv(history.export_session_data("csv", str(tmp_path / "s.csv")))
        assert df["problem"].tolist() == ["threesum"]

    def test_unsupported_format(self, tmp_path):
        with pytest.raises(ValueError):
            RunHistory().export_session_data("xml", str(tmp_path / "s.xml"))

    def test_clear_session(self):
        history = RunHistory()
        history.add_run("prove", self.RUN)
        history.clear_session()
        assert history.get_session_summary()["total_runs"] == 0


class TestProofLogger:
    def test_setup_writes_rotating_file(self, tmp_path):
        proof_logger = ProofLogger.from_config({"log_dir": str(tmp_path / "log"), "level": "DEBUG"})
        try:
            assert not proof_logger.is_configured
            proof_logger.setup()
            proof_logger.setup()
            assert len(proof_logger._handlers) == 2
            assert proof_logger.log_file.startswith(str(tmp_path / "log"))
            proof_logger.log_run({"problem": "threesum", "verdict": "canonical", "solution": "1 1 1"})
        finally:
            proof_logger.close()
        assert not proof_logger.is_configured
        with open(proof_logger.log_file, encoding="utf-8") as f:
            assert "RUN [threesum]" in f.read()

    def test_levels(self, caplog):
        proof_logger = ProofLogger()
        with caplog.at_level(logging.INFO, logger="ProofSystem"):
            proof_logger.log_run({"problem": "ov", "verdict": "bot", "certified": False})
            proof_logger.log_run({"problem": "ov", "verdict": "bot", "certified": True})
            proof_logger.log_attack({"policy": "replace-prime", "non_canonical": 1})
        assert [r.levelname for r in caplog.records] == ["WARNING", "INFO", "WARNING"]
