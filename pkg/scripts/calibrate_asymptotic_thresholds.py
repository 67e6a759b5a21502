"""Calibrate validity thresholds for the potential-density limit laws.

For each fixture model this scans x downward (near-zero law) and upward
(near-infinity law) until the exact density agrees with the limit law to
0.5%, then records that x.  The verify suite re-checks the ratio at the
recorded points with a 1% tolerance, so the fixture carries a factor-two
margin against numerical jitter.

Writes src/levypot/data/asymptotic_thresholds.json (deterministic: fixed
starting points and fixed scan factors, no randomness).
"""

from __future__ import annotations

import argparse
import json
import pathlib

from levypot import (
    AsymptoticRegime,
    InverseGaussianParams,
    TemperedStableParams,
    potential_density_asymptotic,
    potential_density_exact,
)

TARGET_DEV = 5e-3
MAX_STEPS = 200

FIXTURE_MODELS = (
    ("tss-0.5-1.0", TemperedStableParams(0.5, 1.0)),
    ("tss-0.7-2.0", TemperedStableParams(0.7, 2.0)),
    ("ig-1.0-1.0", InverseGaussianParams(1.0, 1.0)),
    ("ig-2.0-0.5", InverseGaussianParams(2.0, 0.5)),
)


def _deviation(model, x: float, regime: AsymptoticRegime) -> float:
    exact = potential_density_exact(model, x)
    limit = potential_density_asymptotic(model, x, regime)
    return abs(exact / limit - 1.0)


def scan_threshold(model, regime: AsymptoticRegime) -> float:
    """First grid point where the limit law is within TARGET_DEV of exact."""
    if regime is AsymptoticRegime.NEAR_ZERO:
        x, factor = 0.1, 0.5
    else:
        x, factor = 1.0, 1.5
    for _ in range(MAX_STEPS):
        if _deviation(model, x, regime) <= TARGET_DEV:
            return x
        x *= factor
    raise RuntimeError(f"no threshold within {MAX_STEPS} steps for {model!r} / {regime.value}")


def build_fixture() -> dict:
    fixture = {}
    for key, model in FIXTURE_MODELS:
        if isinstance(model, TemperedStableParams):
            entry = {"kind": "tss", "alpha": model.alpha, "theta": model.theta}
        else:
            entry = {"kind": "ig", "delta": model.delta, "lam": model.lam}
        entry["x_lo"] = scan_threshold(model, AsymptoticRegime.NEAR_ZERO)
        entry["x_hi"] = scan_threshold(model, AsymptoticRegime.NEAR_INFINITY)
        fixture[key] = entry
        print(f"{key}: x_lo={entry['x_lo']:.6g}  x_hi={entry['x_hi']:.6g}")
    return fixture


def main() -> None:
    default_out = (pathlib.Path(__file__).resolve().parent.parent
                   / "src" / "levypot" / "data" / "asymptotic_thresholds.json")
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=pathlib.Path, default=default_out)
    args = parser.parse_args()

    fixture = build_fixture()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(fixture, indent=2, sort_keys=True) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
