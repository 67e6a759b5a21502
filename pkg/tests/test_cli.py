"""Command-line interface, exercised through real subprocesses."""

import json
import os
import subprocess
import sys

import pytest

from levypot import (
    DensityTable,
    InverseGaussianParams,
    SubordinatedProcessSpec,
    TemperedStableParams,
    green_function,
    potential_density_exact,
)

ENV = dict(os.environ)


def run_cli(*args, expect=0):
    proc = subprocess.run([sys.executable, "-m", "levypot", *args],
                          capture_output=True, text=True, env=ENV)
    assert proc.returncode == expect, f"exit {proc.returncode}, stderr: {proc.stderr[:500]}"
    return proc


def test_eval_matches_library():
    # eval prints one bare full-precision scalar, nothing else
    proc = run_cli("eval", "--quantity", "potential_density", "--model", "tss",
                   "--alpha", "0.5", "--theta", "1", "--x", "1")
    assert float(proc.stdout) == potential_density_exact(TemperedStableParams(0.5, 1.0), 1.0)
    assert proc.stdout.strip().count("\n") == 0


def test_eval_green_function_with_dimension():
    proc = run_cli("eval", "--quantity", "green_function", "--model", "ig",
                   "--delta", "1", "--lambda", "1", "--x", "2", "--dim", "3")
    spec = SubordinatedProcessSpec(InverseGaussianParams(1.0, 1.0), 3)
    assert float(proc.stdout) == green_function(spec, 2.0)


def test_usage_errors_exit_2():
    run_cli("eval", "--quantity", "potential_density", "--model", "tss",
            "--alpha", "0.5", "--x", "1", expect=2)  # missing --theta
    run_cli("nonsense-command", expect=2)
    run_cli("table", "--quantity", "potential_density", "--model", "tss",
            "--alpha", "0.5", "--theta", "1", "--grid-min", "2", "--grid-max", "1",
            "--grid-count", "5", expect=2)  # inverted grid
    # parameter outside the model's domain is an argument problem, not a
    # computation problem
    run_cli("eval", "--quantity", "potential_density", "--model", "tss",
            "--alpha", "1.5", "--theta", "1", "--x", "1", expect=2)


def test_compute_domain_errors_exit_3():
    # valid arguments, but the requested quantity does not exist there
    proc = subprocess.run(
        [sys.executable, "-m", "levypot", "eval", "--quantity", "green_function",
         "--model", "tss", "--alpha", "0.5", "--theta", "1", "--x", "1", "--dim", "2"],
        capture_output=True, text=True, env=ENV)
    assert proc.returncode == 3
    assert "green_function" in proc.stderr  # originating operation is named
    assert proc.stdout == ""


def test_table_csv_shape(tmp_path):
    out = tmp_path / "table.csv"
    run_cli("table", "--quantity", "levy_density", "--model", "ig",
            "--delta", "1", "--lambda", "1", "--grid-min", "0.1", "--grid-max", "10",
            "--grid-count", "4", "--grid-spacing", "log", "--format", "csv",
            "--out", str(out))
    text = out.read_text()
    assert "# quantity=levy_density" in text
    assert "# model.kind=ig" in text
    assert text.strip().splitlines()[-1].count(",") == 1
    parsed = DensityTable.from_csv(text)
    assert len(parsed.grid) == 4


def test_table_json_round_trip_byte_identical():
    proc = run_cli("table", "--quantity", "potential_density", "--model", "tss",
                   "--alpha", "0.5", "--theta", "1", "--grid-min", "0.1",
                   "--grid-max", "10", "--grid-count", "5", "--grid-spacing", "log",
                   "--format", "json")
    raw = proc.stdout
    table = DensityTable.from_json(raw)
    assert table.to_json() + "\n" == raw


def test_simulate_is_deterministic():
    args = ("simulate", "--estimator", "endpoint-laplace", "--model", "ig",
            "--delta", "1", "--lambda", "1", "--s", "1", "--t", "1",
            "--n-paths", "20000", "--seed", "5")
    first = run_cli(*args).stdout
    second = run_cli(*args).stdout
    assert first == second
    payload = json.loads(first)
    assert payload["backend"] in ("numba", "numpy")
    assert abs(payload["z_score"]) <= 3.0


def test_simulate_stable_model():
    proc = run_cli("simulate", "--estimator", "endpoint-laplace", "--model", "stable",
                   "--alpha", "0.7", "--s", "1", "--t", "1",
                   "--n-paths", "20000", "--seed", "6")
    payload = json.loads(proc.stdout)
    assert payload["model"] == {"kind": "stable", "alpha": 0.7}
    assert abs(payload["z_score"]) <= 3.0


def test_verify_single_suite_passes():
    proc = run_cli("verify", "--suite", "adjudicate-constants")
    reports = json.loads(proc.stdout)
    assert len(reports) == 1
    adjudications = reports[0]["summary"]["adjudications"]
    assert len(adjudications) == 4
    assert all(a["winner"] in ("derived", "paper") for a in adjudications)


def test_verify_unknown_suite_exits_2():
    run_cli("verify", "--suite", "no-such-suite", expect=2)
