"""Acceptance gate: one test, and one pass/fail line, per shipped criterion.

Each criterion asserts its numerical condition at the pinned tolerance and
its wall-clock budget.  The session-level warm-up fixture (conftest) keeps
jit compilation out of the timed sections.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from levypot import (
    DensityTable,
    InverseGaussianParams,
    PathConfig,
    RngState,
    TemperedStableParams,
    estimate_potential_measure,
    laplace_exponent,
    potential_measure,
    run_suites,
    sample_ig_increments,
    sample_stable_increments,
    sample_tss_increments,
)


def _run_suite_timed(name):
    t0 = time.perf_counter()
    report = run_suites([name])[0]
    return report, time.perf_counter() - t0


def _assert_all_pass(report, n_expected, elapsed, budget):
    failed = [c.case_id for c in report.cases if not c.passed]
    assert len(report.cases) == n_expected, (
        f"expected {n_expected} cases, suite produced {len(report.cases)}")
    assert not failed, f"failed cases: {failed}"
    assert elapsed <= budget, f"runtime {elapsed:.1f}s exceeds {budget:.0f}s budget"


@pytest.fixture(scope="module")
def asymptotic_ratio_report():
    return _run_suite_timed("asymptotic-ratio")


def test_criterion_1_laplace_identity_inverts_exponent():
    # |L[u](s) phi(s) - 1| <= 1e-6 on 9 tss + 9 ig parameter sets x 6 s-values
    report, elapsed = _run_suite_timed("laplace-identity")
    _assert_all_pass(report, 108, elapsed, 60.0)


def test_criterion_2_levy_khintchine_representation():
    # |integral (1 - e^{-sx}) nu(dx) - phi(s)| <= 1e-8 (1 + phi) on the same grids
    report, elapsed = _run_suite_timed("levy-khintchine")
    _assert_all_pass(report, 108, elapsed, 30.0)


def test_criterion_3_tempered_stable_inverse_gaussian_equivalence():
    # alpha = 1/2 model equals its inverse-Gaussian twin to rel 1e-6:
    # densities at 5 abscissae, Green and jump values at 3 radii, d = 3
    report, elapsed = _run_suite_timed("equivalence")
    _assert_all_pass(report, 33, elapsed, 120.0)


def test_criterion_4_bessel_closed_form_matches_quadrature():
    # rel <= 1e-8 over 5 models x 4 radii x 3 dimensions
    report, elapsed = _run_suite_timed("bessel-vs-quadrature")
    _assert_all_pass(report, 60, elapsed, 120.0)


def test_criterion_5_asymptotic_power_law_slopes(asymptotic_ratio_report):
    # log-log slopes within +-0.02 of the predicted exponents
    report, elapsed = asymptotic_ratio_report
    slopes = [c for c in report.cases if c.case_id.startswith("slope-")]
    assert len(slopes) == 6
    failed = [c.case_id for c in slopes if not c.passed]
    assert not failed, f"failed slope cases: {failed}"
    assert elapsed <= 60.0, f"runtime {elapsed:.1f}s exceeds 60s budget"


def test_criterion_6_asymptotic_constant_ratios(asymptotic_ratio_report):
    # u_exact/u_asym in [0.99, 1.01] at the calibrated thresholds, both
    # models and regimes; far-field jump ratio in [0.98, 1.02] at r = 50
    report, elapsed = asymptotic_ratio_report
    ratios = [c for c in report.cases if c.case_id.startswith(("u-ratio-", "jump-ratio-"))]
    assert len(ratios) == 9
    assert any(c.case_id.startswith("jump-ratio-infinity") for c in ratios)
    failed = [c.case_id for c in ratios if not c.passed]
    assert not failed, f"failed ratio cases: {failed}"
    assert elapsed <= 60.0, f"runtime {elapsed:.1f}s exceeds 60s budget"


def test_criterion_7_adjudication_verdicts():
    # the verify command reports, for each disputed asymptotic constant,
    # a winner within rel 5e-3 of the quadrature oracle and a loser outside
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "levypot", "verify",
                           "--suite", "adjudicate-constants"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stderr[:500]
    reports = json.loads(proc.stdout)
    verdicts = reports[0]["summary"]["adjudications"]
    assert len(verdicts) == 4
    for v in verdicts:
        assert v["winner"] in ("derived", "paper"), f"no clear winner in {v['case_id']}"
        win_dev = v["rel_dev_derived"] if v["winner"] == "derived" else v["rel_dev_paper"]
        lose_dev = v["rel_dev_paper"] if v["winner"] == "derived" else v["rel_dev_derived"]
        assert win_dev <= 5e-3, f"{v['case_id']}: winner off by {win_dev:.2e}"
        assert lose_dev > 5e-3, f"{v['case_id']}: loser within band ({lose_dev:.2e})"
    assert elapsed <= 60.0, f"runtime {elapsed:.1f}s exceeds 60s budget"


def test_criterion_8_monte_carlo_within_three_standard_errors():
    t0 = time.perf_counter()
    ig = InverseGaussianParams(1.0, 1.0)
    est = estimate_potential_measure(ig, 1.0, 2.0, PathConfig(1e-3, 10.0, 100_000),
                                     RngState(2026, 0))
    target = potential_measure(ig, 1.0, 2.0)
    z = (est.value - target) / est.std_error
    assert abs(z) <= 3.0, f"occupation estimate z = {z:+.2f}"

    tss = TemperedStableParams(0.5, 1.0)
    endpoint_checks = (
        ("stable", sample_stable_increments(0.7, 1.0, 1_000_000, RngState(2027, 0)), 1.0),
        ("tss", sample_tss_increments(tss, 1.0, 1_000_000, RngState(2028, 0)),
         laplace_exponent(tss, 1.0)),
        ("ig", sample_ig_increments(ig, 1.0, 1_000_000, RngState(2029, 0)),
         laplace_exponent(ig, 1.0)),
    )
    for name, draws, phi in endpoint_checks:
        vals = np.exp(-draws)
        se = vals.std(ddof=1) / math.sqrt(vals.size)
        zz = (vals.mean() - math.exp(-phi)) / se
        assert abs(zz) <= 3.0, f"{name} endpoint transform z = {zz:+.2f}"
    elapsed = time.perf_counter() - t0
    assert elapsed <= 600.0, f"runtime {elapsed:.1f}s exceeds 600s budget"


def test_criterion_9_cli_determinism_and_round_trip():
    t0 = time.perf_counter()
    sim_args = [sys.executable, "-m", "levypot", "simulate", "--estimator",
                "endpoint-laplace", "--model", "ig", "--delta", "1", "--lambda", "1",
                "--s", "1", "--t", "2", "--n-paths", "20000", "--seed", "3"]
    first = subprocess.run(sim_args, capture_output=True, text=True)
    second = subprocess.run(sim_args, capture_output=True, text=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout, "simulate output is not byte-stable"
    json.loads(first.stdout)  # and it is well-formed JSON

    table_args = [sys.executable, "-m", "levypot", "table", "--quantity",
                  "jump_density", "--model", "tss", "--alpha", "0.5", "--theta", "1",
                  "--dim", "1", "--grid-min", "0.001", "--grid-max", "1000",
                  "--grid-count", "61", "--grid-spacing", "log", "--format", "json"]
    proc = subprocess.run(table_args, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr[:500]
    table = DensityTable.from_json(proc.stdout)
    assert table.to_json() + "\n" == proc.stdout, "table JSON does not round-trip byte-identically"
    # decreasing until the exponential tail leaves double range, zero after
    vals = table.values
    assert all(b < a or (b == 0.0 and a >= 0.0) for a, b in zip(vals, vals[1:])), (
        "jump density values must decrease in r until underflow")
    assert vals[0] > 0.0 and min(vals) >= 0.0
    elapsed = time.perf_counter() - t0
    assert elapsed <= 30.0, f"runtime {elapsed:.1f}s exceeds 30s budget"
