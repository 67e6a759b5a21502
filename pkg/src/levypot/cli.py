"""Command line interface.

Four subcommands: ``eval`` (one scalar, 17 significant digits), ``table``
(grids as CSV or JSON), ``verify`` (self-check suites as JSON reports) and
``simulate`` (Monte Carlo estimators as JSON).  Stdout carries data only;
diagnostics go to stderr.  Nothing is ever colorized, so NO_COLOR is
honored by construction.

Exit codes: 0 success; 1 a verify case failed or a simulate z-score left
[-3, 3]; 2 argument/usage errors (including invalid model parameters);
3 numerical errors during evaluation, reported as "error in <operation>: ...".
"""

import argparse
import math
import sys

import numpy as np

from ._backend import BACKEND
from .errors import DomainError, LevyPotError
from .heatkernel import (
    SubordinatedProcessSpec,
    ball_average_green,
    green_asymptotic,
    green_function,
    jump_density,
    jump_density_asymptotic,
    jump_density_bessel,
)
from .montecarlo import (
    Estimate,
    PathConfig,
    RngState,
    estimate_green_function,
    estimate_potential_measure,
    sample_ig_increments,
    sample_stable_increments,
    sample_tss_increments,
)
from .numerics import DEFAULT_QUADRATURE, QuadratureConfig
from .reporting import DensityTable, TABLE_QUANTITIES, canonical_json, format_number
from .subordinators import (
    AsymptoticRegime,
    InverseGaussianParams,
    TemperedStableParams,
    laplace_exponent,
    levy_density,
    model_descriptor,
    potential_density_asymptotic,
    potential_density_exact,
    potential_measure,
)
from .verify import SUITE_NAMES, run_suites

_SPATIAL_QUANTITIES = {"green_function", "green_asym", "jump_density",
                       "jump_density_bessel", "jump_density_asym"}
_REGIME_QUANTITIES = {"potential_density_asym", "green_asym", "jump_density_asym"}


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levypot",
        description="Potential theory of tempered stable / inverse Gaussian subordinators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p, with_stable=False):
        choices = ["tss", "ig"] + (["stable"] if with_stable else [])
        p.add_argument("--model", choices=choices, required=True)
        p.add_argument("--alpha", type=float, help="stability index (tss, stable)")
        p.add_argument("--theta", type=float, help="tempering rate (tss)")
        p.add_argument("--delta", type=float, help="scale (ig)")
        p.add_argument("--lambda", dest="lam", type=float, help="drift-tempering rate (ig)")

    def add_quadrature_flags(p):
        p.add_argument("--abs-tol", type=float)
        p.add_argument("--rel-tol", type=float)
        p.add_argument("--max-subdivisions", type=int)
        p.add_argument("--tail-knot", type=float)

    def add_spatial_flags(p):
        p.add_argument("--dim", type=int, help="spatial dimension of the Brownian part")
        p.add_argument("--regime", choices=["zero", "infinity"])
        p.add_argument("--constant-source", choices=["paper", "derived"], default="derived")

    def add_quantity_flag(p):
        # hyphenated spellings are accepted and folded to the canonical
        # underscore names used in serialized tables
        p.add_argument("--quantity", required=True,
                       type=lambda s: s.replace("-", "_"), choices=list(TABLE_QUANTITIES),
                       metavar="{" + ",".join(TABLE_QUANTITIES) + "}")

    p_eval = sub.add_parser("eval", help="evaluate one quantity at one abscissa")
    add_quantity_flag(p_eval)
    add_model_flags(p_eval)
    p_eval.add_argument("--x", type=float, required=True, help="abscissa (radius for spatial quantities)")
    add_spatial_flags(p_eval)
    add_quadrature_flags(p_eval)

    p_table = sub.add_parser("table", help="evaluate one quantity on a grid")
    add_quantity_flag(p_table)
    add_model_flags(p_table)
    p_table.add_argument("--grid-min", type=float, required=True)
    p_table.add_argument("--grid-max", type=float, required=True)
    p_table.add_argument("--grid-count", type=int, required=True)
    p_table.add_argument("--grid-spacing", choices=["lin", "log"], default="log")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--out", metavar="FILE")
    add_spatial_flags(p_table)
    add_quadrature_flags(p_table)

    p_verify = sub.add_parser("verify", help="run self-check suites")
    p_verify.add_argument("--suite", action="append", choices=list(SUITE_NAMES),
                          help="repeatable; default runs every suite")
    p_verify.add_argument("--tolerance-scale", type=float, default=1.0)
    p_verify.add_argument("--out", metavar="FILE")
    add_quadrature_flags(p_verify)

    p_sim = sub.add_parser("simulate", help="Monte Carlo estimators")
    p_sim.add_argument("--estimator", required=True,
                       choices=["potential-measure", "green-function", "endpoint-laplace"])
    add_model_flags(p_sim, with_stable=True)
    p_sim.add_argument("--a", type=float, help="interval start (potential-measure)")
    p_sim.add_argument("--b", type=float, help="interval end (potential-measure)")
    p_sim.add_argument("--x", type=float, help="radius (green-function)")
    p_sim.add_argument("--ball-radius", type=float, help="occupation ball radius (green-function)")
    p_sim.add_argument("--dim", type=int, help="spatial dimension (green-function)")
    p_sim.add_argument("--s", type=float, help="transform variable (endpoint-laplace)")
    p_sim.add_argument("--t", type=float, help="time horizon of one increment (endpoint-laplace)")
    p_sim.add_argument("--n-paths", type=int, default=1000)
    p_sim.add_argument("--dt", type=float, default=1e-3)
    p_sim.add_argument("--horizon", type=float, default=10.0)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--stream-id", type=int, default=0)
    p_sim.add_argument("--out", metavar="FILE")
    add_quadrature_flags(p_sim)

    return parser


def _subordinator_from_args(args):
    if args.model == "tss":
        if args.alpha is None or args.theta is None:
            raise _UsageError("--model tss requires --alpha and --theta")
        return TemperedStableParams(args.alpha, args.theta)
    if args.model == "ig":
        if args.delta is None or args.lam is None:
            raise _UsageError("--model ig requires --delta and --lambda")
        return InverseGaussianParams(args.delta, args.lam)
    raise _UsageError(f"model {args.model!r} not valid here")


def _quadrature_from_args(args) -> QuadratureConfig:
    base = DEFAULT_QUADRATURE
    return QuadratureConfig(
        abs_tol=base.abs_tol if args.abs_tol is None else args.abs_tol,
        rel_tol=base.rel_tol if args.rel_tol is None else args.rel_tol,
        max_subdivisions=base.max_subdivisions if args.max_subdivisions is None else args.max_subdivisions,
        tail_knot=base.tail_knot if args.tail_knot is None else args.tail_knot,
    )


def _regime_from_args(args) -> AsymptoticRegime:
    if args.regime is None:
        raise _UsageError(f"--quantity {args.quantity} requires --regime {{zero,infinity}}")
    return AsymptoticRegime.NEAR_ZERO if args.regime == "zero" else AsymptoticRegime.NEAR_INFINITY


def _spec_from_args(args) -> SubordinatedProcessSpec:
    if args.dim is None:
        raise _UsageError(f"--quantity {args.quantity} requires --dim")
    return SubordinatedProcessSpec(_subordinator_from_args(args), args.dim)


def _point_value(args, model_or_spec, x: float, config: QuadratureConfig) -> float:
    q = args.quantity
    if q == "potential_density":
        return potential_density_exact(model_or_spec, x, config)
    if q == "potential_density_asym":
        return potential_density_asymptotic(model_or_spec, x, _regime_from_args(args))
    if q == "levy_density":
        return levy_density(model_or_spec, x)
    if q == "green_function":
        return green_function(model_or_spec, x, config)
    if q == "green_asym":
        return green_asymptotic(model_or_spec, x, _regime_from_args(args))
    if q == "jump_density":
        return jump_density(model_or_spec, x, config)
    if q == "jump_density_bessel":
        return jump_density_bessel(model_or_spec, x)
    return jump_density_asymptotic(model_or_spec, x, _regime_from_args(args), args.constant_source)


def _build_eval_target(args):
    if args.quantity in _SPATIAL_QUANTITIES:
        return _spec_from_args(args)
    return _subordinator_from_args(args)


def _write_out(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _cmd_eval(args) -> int:
    try:
        target = _build_eval_target(args)
        config = _quadrature_from_args(args)
        if args.quantity in _REGIME_QUANTITIES:
            _regime_from_args(args)  # fail fast as a usage error
    except DomainError as e:
        raise _UsageError(str(e))
    try:
        value = _point_value(args, target, args.x, config)
    except LevyPotError as e:
        sys.stderr.write(f"error in {e}\n")
        return 3
    sys.stdout.write(format_number(float(value)) + "\n")
    return 0


def _cmd_table(args) -> int:
    try:
        target = _build_eval_target(args)
        config = _quadrature_from_args(args)
        if args.quantity in _REGIME_QUANTITIES:
            _regime_from_args(args)
        if args.grid_count < 2:
            raise _UsageError("--grid-count must be >= 2")
        lo, hi = args.grid_min, args.grid_max
        if not (lo > 0.0 and hi > lo and math.isfinite(hi)):
            raise _UsageError(f"grid needs 0 < min < max finite, got [{lo}, {hi}]")
        if args.grid_spacing == "log":
            grid = np.logspace(math.log10(lo), math.log10(hi), args.grid_count)
        else:
            grid = np.linspace(lo, hi, args.grid_count)
    except DomainError as e:
        raise _UsageError(str(e))

    values = []
    for x in grid:
        try:
            values.append(_point_value(args, target, float(x), config))
        except LevyPotError as e:
            sys.stderr.write(f"table aborted at x={format_number(float(x))}: error in {e}\n")
            return 3

    if isinstance(target, SubordinatedProcessSpec):
        model = model_descriptor(target.model)
        meta = {"dimension": target.dimension}
    else:
        model = model_descriptor(target)
        meta = {}
    if args.quantity in _REGIME_QUANTITIES:
        meta["regime"] = args.regime
    if args.quantity == "jump_density_asym":
        meta["constant_source"] = args.constant_source
    meta["spacing"] = args.grid_spacing
    table = DensityTable(quantity=args.quantity, model=model, grid=list(grid),
                         values=values, meta=meta)
    text = table.to_csv() if args.format == "csv" else table.to_json() + "\n"
    _write_out(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    try:
        config = _quadrature_from_args(args)
        scale = args.tolerance_scale
        if not (scale > 0.0 and math.isfinite(scale)):
            raise _UsageError(f"--tolerance-scale must be positive, got {scale}")
        names = args.suite if args.suite else list(SUITE_NAMES)
    except DomainError as e:
        raise _UsageError(str(e))
    try:
        reports = run_suites(names, tolerance_scale=scale, config=config)
    except LevyPotError as e:
        sys.stderr.write(f"error in {e}\n")
        return 3
    _write_out(canonical_json([r.to_dict() for r in reports]) + "\n", args.out)
    return 1 if any(r.n_failed for r in reports) else 0


def _estimate_dict(est: Estimate) -> dict:
    return {
        "value": est.value,
        "std_error": est.std_error,
        "n_samples": est.n_samples,
        "censored_fraction": est.censored_fraction,
        "bias_bound": est.bias_bound,
    }


def _cmd_simulate(args) -> int:
    try:
        config = _quadrature_from_args(args)
        rng = RngState(args.seed, args.stream_id)
        if args.estimator == "endpoint-laplace":
            if args.s is None or args.t is None:
                raise _UsageError("--estimator endpoint-laplace requires --s and --t")
            if args.model == "stable":
                if args.alpha is None:
                    raise _UsageError("--model stable requires --alpha")
                model = None
                model_desc = {"kind": "stable", "alpha": args.alpha}
            else:
                model = _subordinator_from_args(args)
                model_desc = model_descriptor(model)
            n = args.n_paths
            if n < 2:
                raise _UsageError("--n-paths must be >= 2 for endpoint-laplace")
        else:
            if args.model == "stable":
                raise _UsageError(f"--model stable only supports endpoint-laplace")
            model = _subordinator_from_args(args)
            model_desc = model_descriptor(model)
            path_config = PathConfig(args.dt, args.horizon, args.n_paths)
    except DomainError as e:
        raise _UsageError(str(e))

    try:
        if args.estimator == "potential-measure":
            if args.a is None or args.b is None:
                raise _UsageError("--estimator potential-measure requires --a and --b")
            est = estimate_potential_measure(model, args.a, args.b, path_config, rng)
            target = potential_measure(model, args.a, args.b, config)
            payload = {"estimator": "potential-measure", "model": model_desc,
                       "interval": [args.a, args.b]}
        elif args.estimator == "green-function":
            if args.x is None or args.ball_radius is None or args.dim is None:
                raise _UsageError("--estimator green-function requires --x, --ball-radius and --dim")
            spec = SubordinatedProcessSpec(model, args.dim)
            est = estimate_green_function(spec, args.x, args.ball_radius, path_config, rng)
            target = ball_average_green(spec, args.x, args.ball_radius, config)
            payload = {"estimator": "green-function", "model": model_desc,
                       "dimension": args.dim, "radius": args.x, "ball_radius": args.ball_radius}
        else:
            if args.model == "stable":
                draws = sample_stable_increments(args.alpha, args.t, args.n_paths, rng)
                phi = args.s ** args.alpha
            elif isinstance(model, TemperedStableParams):
                draws = sample_tss_increments(model, args.t, args.n_paths, rng)
                phi = laplace_exponent(model, args.s)
            else:
                draws = sample_ig_increments(model, args.t, args.n_paths, rng)
                phi = laplace_exponent(model, args.s)
            vals = np.exp(-args.s * draws)
            n = args.n_paths
            est = Estimate(float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(n)), n)
            target = math.exp(-args.t * phi)
            payload = {"estimator": "endpoint-laplace", "model": model_desc,
                       "s": args.s, "t": args.t}
    except _UsageError:
        raise
    except LevyPotError as e:
        sys.stderr.write(f"error in {e}\n")
        return 3

    if est.std_error > 0.0:
        z = (est.value - target) / est.std_error
    else:
        z = 0.0 if est.value == target else math.copysign(1e12, est.value - target)
    payload["estimate"] = _estimate_dict(est)
    payload["target"] = target
    payload["z_score"] = z
    payload["seed"] = args.seed
    payload["stream_id"] = args.stream_id
    if args.estimator != "endpoint-laplace":
        payload["path_config"] = {"dt": path_config.dt, "horizon": path_config.horizon,
                                  "n_paths": path_config.n_paths}
    payload["backend"] = BACKEND
    _write_out(canonical_json(payload) + "\n", args.out)
    return 0 if abs(z) <= 3.0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_simulate(args)
    except _UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
