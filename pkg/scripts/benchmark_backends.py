"""Time representative workloads on the jit backend and the numpy fallback.

Runs each workload once in this process, then re-runs the script in a
subprocess with LEVYPOT_NO_NUMBA=1 and prints a side-by-side table.  Every
workload is executed once untimed first so jit compilation is not charged
to the measurement.

Usage: python scripts/benchmark_backends.py [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from levypot import (
    BACKEND,
    InverseGaussianParams,
    PathConfig,
    RngState,
    SubordinatedProcessSpec,
    TemperedStableParams,
    estimate_potential_measure,
    green_function,
    jump_density,
    potential_density_exact,
    sample_tss_increments,
)

TSS = TemperedStableParams(0.5, 1.0)
IG = InverseGaussianParams(1.0, 1.0)


def _sweep_potential_density():
    for x in np.logspace(-3.0, 2.0, 300):
        potential_density_exact(TSS, float(x))


def _green_d3():
    spec = SubordinatedProcessSpec(TSS, 3)
    for r in (0.05, 0.2, 1.0, 5.0, 20.0):
        green_function(spec, r)


def _jump_sweep():
    spec = SubordinatedProcessSpec(TemperedStableParams(0.7, 2.0), 2)
    for r in np.logspace(-2.0, np.log10(20.0), 20):
        jump_density(spec, float(r))


def _tss_draws():
    sample_tss_increments(TSS, 1.0, 2_000_000, RngState(11, 0))


def _potential_measure_mc():
    estimate_potential_measure(IG, 1.0, 2.0, PathConfig(1e-3, 10.0, 2000), RngState(11, 0))


WORKLOADS = (
    ("potential-density-sweep-300", _sweep_potential_density),
    ("green-function-d3-5pts", _green_d3),
    ("jump-density-sweep-20", _jump_sweep),
    ("tss-increments-2e6", _tss_draws),
    ("potential-measure-mc-2000-paths", _potential_measure_mc),
)


def run_timings() -> dict:
    timings = {}
    for name, fn in WORKLOADS:
        fn()  # warm-up: jit compile + first-call caches
        t0 = time.perf_counter()
        fn()
        timings[name] = time.perf_counter() - t0
    return timings


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true",
                        help="print machine-readable timings for this process only")
    args = parser.parse_args()

    timings = run_timings()
    if args.json:
        print(json.dumps({"backend": BACKEND, "timings": timings}))
        return

    env = dict(os.environ, LEVYPOT_NO_NUMBA="1")
    proc = subprocess.run([sys.executable, os.path.abspath(__file__), "--json"],
                          capture_output=True, text=True, env=env, check=True)
    fallback = json.loads(proc.stdout.strip().splitlines()[-1])

    other = fallback["timings"]
    print(f"{'workload':34s} {BACKEND + ' [s]':>12s} {fallback['backend'] + ' [s]':>12s} {'speedup':>9s}")
    for name, _ in WORKLOADS:
        a, b = timings[name], other[name]
        print(f"{name:34s} {a:12.4f} {b:12.4f} {b / a:8.1f}x")


if __name__ == "__main__":
    main()
