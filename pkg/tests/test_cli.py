"""
End-to-end tests of the launcher subcommands and their exit codes
"""

import json

import pandas as pd
import pytest

from launcher import main


@pytest.fixture
def settings(tmp_path):
    path = tmp_path / "setting.json"
    path.write_text(json.dumps({"logging": {"log_dir": str(tmp_path / "log")}}), encoding="utf-8")
    return str(path)


@pytest.fixture
def cli(settings):
    def _run(*argv):
        return main(["--settings", settings, *argv])
    return _run


@pytest.fixture
def instance_file(tmp_path, threesum_text):
    path = tmp_path / "threesum.txt"
    path.write_text(threesum_text, encoding="utf-8")
    return str(path)


@pytest.fixture
def none_file(tmp_path, threesum_none_text):
    path = tmp_path / "none.txt"
    path.write_text(threesum_none_text, encoding="utf-8")
    return str(path)


def test_gen_to_stdout(cli, capsys):
    assert cli("gen", "--problem", "ov", "--n", "4", "--d", "3", "--seed", "5", "--planted") == 0
    out = capsys.readouterr().out
    assert out.startswith("problem: ov\nn: 4\nd: 3\n")


def test_gen_to_file(cli, tmp_path, capsys):
    target = tmp_path / "out" / "clique.txt"
    assert cli("gen", "--problem", "kclique", "--seed", "0x10", "--out", str(target)) == 0
    assert target.read_text(encoding="utf-8").startswith("problem: kclique\n")
    assert "instance written" in capsys.readouterr().out


def test_gen_over_generator_limit(cli, capsys):
    assert cli("gen", "--problem", "zwt", "--n", "4096") == 3
    assert "generator limit" in capsys.readouterr().out


def test_prove_and_verify(cli, instance_file, tmp_path, capsys):
    transcript = tmp_path / "run.transcript"
    assert cli("prove", "--in", instance_file, "--out", str(transcript)) == 0
    assert "solution: 1 1 1" in capsys.readouterr().out

    assert cli("verify", "--in", instance_file, "--transcript", str(transcript)) == 0
    assert "verdict: canonical" in capsys.readouterr().out


def test_prove_without_solution(cli, none_file, capsys):
    assert cli("prove", "--in", none_file) == 2
    out = capsys.readouterr().out
    assert "verdict: bot" in out and "certified: true" in out


def test_tampered_transcript(cli, instance_file, tmp_path, capsys):
    transcript = tmp_path / "run.transcript"
    cli("prove", "--in", instance_file, "--out", str(transcript))
    text = transcript.read_text(encoding="utf-8")
    transcript.write_text(text.replace("solution: 1 1 1", "solution: 1 2 2", 1), encoding="utf-8")
    capsys.readouterr()
    assert cli("verify", "--in", instance_file, "--transcript", str(transcript)) == 2
    assert "verdict: bot" in capsys.readouterr().out


def test_verify_against_other_instance(cli, instance_file, none_file, tmp_path, capsys):
    transcript = tmp_path / "run.transcript"
    cli("prove", "--in", instance_file, "--out", str(transcript))
    capsys.readouterr()
    assert cli("verify", "--in", none_file, "--transcript", str(transcript)) == 3
    assert "does not match" in capsys.readouterr().out


def test_problem_mismatch(cli, instance_file):
    assert cli("prove", "--problem", "ov", "--in", instance_file) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("prove",),
        ("prove", "--in", "missing-file.txt"),
        ("gen", "--problem", "sat"),
        ("attack", "--problem", "threesum", "--trials", "0"),
    ],
)
def test_errors_exit_3(cli, argv):
    assert cli(*argv) == 3


def test_corrupt_instance(cli, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("problem: threesum\nn: two\n", encoding="utf-8")
    assert cli("oracle", "--in", str(bad)) == 3


def test_usage_errors(settings):
    assert main([]) == 3
    assert main(["--settings", settings, "frobnicate"]) == 3
    assert main(["--help"]) == 0


def test_bad_settings(tmp_path, instance_file, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert main(["--settings", str(broken), "oracle", "--in", instance_file]) == 3
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"harness": {"trials": 0}}), encoding="utf-8")
    assert main(["--settings", str(invalid), "oracle", "--in", instance_file]) == 3
    assert "trials" in capsys.readouterr().out


def test_oracle_verbose(cli, instance_file, none_file, capsys):
    assert cli("oracle", "--in", instance_file, "--verbose") == 0
    out = capsys.readouterr().out
    assert "solution: 1 1 1" in out and "threshold: 3" in out
    assert cli("oracle", "--in", none_file) == 0
    assert "solution: none" in capsys.readouterr().out


def test_attack_export(cli, instance_file, tmp_path, capsys):
    report = tmp_path / "attack.csv"
    code = cli("attack", "--in", instance_file, "--policy", "echo-honest", "--trials", "5", "--out", str(report))
    assert code == 0
    assert "echo-honest" in capsys.readouterr().out
    df = pd.read_csv(report)
    assert df.loc[0, "canonical"] == 5 and df.loc[0, "non-canonical-accepts"] == 0


def test_attack_unknown_policy(cli, instance_file):
    assert cli("attack", "--in", instance_file, "--policy", "bribe", "--trials", "2") == 3


@pytest.mark.slow
def test_attack_all_policies(cli, instance_file, capsys):
    assert cli("attack", "--in", instance_file, "--trials", "20", "--workers", "2") == 0
    out = capsys.readouterr().out
    for policy in ("flip-solution-block", "replace-prime", "echo-honest"):
        assert policy in out


@pytest.mark.slow
def test_bench(cli, tmp_path, capsys):
    report = tmp_path / "bench.json"
    assert cli("bench", "--problem", "threesum", "--ladder", "4,8", "--out", str(report)) == 0
    out = capsys.readouterr().out
    assert "prover_slope:" in out and "verifier_slope:" in out
    assert [row["n"] for row in json.loads(report.read_text(encoding="utf-8"))] == [4, 8]


def test_wrapping_zwt_weights(cli, write_file, capsys):
    big = 6148914691236517206
    wraps = write_file("wrap.txt", "problem: zwt", "n: 3", f"edge: 1 2 {big}", f"edge: 1 3 {big}",
                       f"edge: 2 3 {2 ** 64 - 2 * big}")
    huge = write_file("huge.txt", "problem: zwt", "n: 3", f"edge: 1 2 {2 ** 70}", "edge: 1 3 1", "edge: 2 3 1")
    for path in (wraps, huge):
        assert cli("prove", "--in", str(path)) == 3
        assert cli("oracle", "--in", str(path)) == 3
    assert "2^61" in capsys.readouterr().out
