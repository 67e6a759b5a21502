"""Brownian motion time-changed by a subordinator: Green and jump densities.

All spatial quantities are radial;  points enter only through |x|.  With
p(t, x) the d-dimensional heat kernel (variance 2t per coordinate, the
generator being the Laplacian), the subordinated process has

    green:  G(r) = int_0^inf p(t, r) u(t) dt          (d >= 3)
    jump:   J(r) = int_0^inf p(t, r) levy(t) dt       (d >= 1)

where u is the subordinator's potential density and levy its Levy density.
J also has a closed Bessel-K form, computed by an entirely independent code
path (:func:`jump_density_bessel`), which the verify suites pit against the
time integral.  The far-field/near-field limits of J come in two published
constant variants; ``constant_source`` selects between them and the
``adjudicate-constants`` verify suite reports which one matches quadrature.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .errors import DimensionError, DomainError, OverflowRangeError
from .numerics import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    bessel_k,
    bessel_k_scaled,
    gamma_fn,
    integrate_interval,
)
from .subordinators import (
    AsymptoticRegime,
    InverseGaussianParams,
    SubordinatorModel,
    TemperedStableParams,
    potential_density_asymptotic,
    _code,
    _raise_quadrature,
)

_LOG_EXP_MAX = 709.0
_LOG_EXP_MIN = -745.0


@dataclass(frozen=True)
class SubordinatedProcessSpec:
    """A subordinator model plus the spatial dimension of the Brownian part."""

    model: SubordinatorModel
    dimension: int

    def __post_init__(self):
        if isinstance(self.dimension, bool) or not isinstance(self.dimension, (int, np.integer)):
            raise DimensionError("subordinated_process_spec", f"dimension must be an integer, got {self.dimension!r}")
        if self.dimension < 1:
            raise DimensionError("subordinated_process_spec", f"dimension must be >= 1, got {self.dimension}")
        if not isinstance(self.model, (TemperedStableParams, InverseGaussianParams)):
            raise DomainError("subordinated_process_spec", f"unsupported model type {type(self.model).__name__}")
        object.__setattr__(self, "dimension", int(self.dimension))


def heat_kernel(dimension: int, t: float, x) -> float:
    """Transition density (4 pi t)^{-d/2} e^{-|x|^2 / 4t} at the point x."""
    if isinstance(dimension, bool) or not isinstance(dimension, (int, np.integer)):
        raise DimensionError("heat_kernel", f"dimension must be an integer, got {dimension!r}")
    d = int(dimension)
    if d < 1:
        raise DimensionError("heat_kernel", f"dimension must be >= 1, got {d}")
    tv = float(t)
    if not (math.isfinite(tv) and tv > 0.0):
        raise DomainError("heat_kernel", f"time must be positive, got {t}")
    xv = np.atleast_1d(np.asarray(x, dtype=np.float64)).ravel()
    if xv.size != d:
        raise DimensionError("heat_kernel", f"point has {xv.size} coordinates, dimension is {d}")
    r2 = float(xv @ xv)
    return (4.0 * math.pi * tv) ** (-0.5 * d) * math.exp(-r2 / (4.0 * tv))


def _check_radius(operation: str, r) -> float:
    rv = float(r)
    if not (math.isfinite(rv) and rv > 0.0):
        raise DomainError(operation, f"radius must be positive and finite, got {r}")
    return rv


def green_function(spec: SubordinatedProcessSpec, r: float,
                   config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Green function at radius r; requires d >= 3 (transience)."""
    rv = _check_radius("green_function", r)
    if spec.dimension < 3:
        raise DimensionError("green_function", f"occupation densities require dimension >= 3, got {spec.dimension}")
    kind, m1, m2 = _code(spec.model, "green_function")
    val, err, used, status = _k.green_value(kind, m1, m2, rv, 0.5 * spec.dimension,
                                            config.abs_tol, config.rel_tol,
                                            int(config.max_subdivisions), config.tail_knot)
    _raise_quadrature("green_function", status, err, used)
    return val


def green_asymptotic(spec: SubordinatedProcessSpec, r: float, regime: AsymptoticRegime) -> float:
    """Leading term of G near 0 or near infinity."""
    rv = _check_radius("green_asymptotic", r)
    if not isinstance(regime, AsymptoticRegime):
        raise DomainError("green_asymptotic", f"unknown regime {regime!r}")
    d = spec.dimension
    model = spec.model
    if regime is AsymptoticRegime.NEAR_INFINITY:
        if d < 3:
            raise DimensionError("green_asymptotic", f"far-field law requires dimension >= 3, got {d}")
        u_inf = potential_density_asymptotic(model, 1.0, AsymptoticRegime.NEAR_INFINITY)
        return gamma_fn(0.5 * d - 1.0) / (4.0 * math.pi ** (0.5 * d)) * u_inf * rv ** (2.0 - d)
    if isinstance(model, TemperedStableParams):
        if d <= 2.0 * model.alpha:
            raise DimensionError("green_asymptotic",
                                 f"near-field law requires dimension > 2*alpha = {2.0 * model.alpha}, got {d}")
        a = model.alpha
        return (gamma_fn(0.5 * (d - 2.0 * a))
                / (math.pi ** (0.5 * d) * 4.0 ** a * gamma_fn(a))) * rv ** (2.0 * a - d)
    if d < 2:
        raise DimensionError("green_asymptotic", "near-field law requires dimension >= 2 for this family")
    return (gamma_fn(0.5 * (d - 1.0)) / gamma_fn(0.5)
            / (2.0 ** 1.5 * math.pi ** (0.5 * d) * model.delta)) * rv ** (1.0 - d)


def jump_density(spec: SubordinatedProcessSpec, r: float,
                 config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Jump kernel at radius r via the subordination time integral.

    This is the quadrature route, independent of the Bessel closed form;
    an internal exponential shift keeps relative error control even where
    the result is ~ 1e-300.
    """
    rv = _check_radius("jump_density", r)
    kind, m1, m2 = _code(spec.model, "jump_density")
    c = spec.model.levy_constant if kind == _k.MODEL_TSS else 0.0
    val, err, used, status, shift = _k.jump_value(kind, m1, m2, c, rv, 0.5 * spec.dimension,
                                                  config.abs_tol, config.rel_tol,
                                                  int(config.max_subdivisions), config.tail_knot)
    _raise_quadrature("jump_density", status, err, used)
    if math.isinf(val):
        raise OverflowRangeError("jump_density", f"jump density at r={rv} exceeds double range")
    if val <= 0.0:
        return 0.0
    if shift > 600.0:
        logv = math.log(val) - shift
        return math.exp(logv) if logv > _LOG_EXP_MIN else 0.0
    return val * math.exp(-shift)


def _closed_form_pieces(spec: SubordinatedProcessSpec, r: float):
    """(log prefactor, order, argument) of J(r) = pref * K_nu(omega)."""
    d = spec.dimension
    model = spec.model
    if isinstance(model, TemperedStableParams):
        nu = model.alpha + 0.5 * d
        omega = math.sqrt(model.theta) * r
        logpref = (math.log(2.0 * model.levy_constant) - d * math.log(2.0)
                   - 0.5 * d * math.log(math.pi)
                   + 0.5 * nu * math.log(4.0 * model.theta) - nu * math.log(r))
    else:
        nu = 0.5 * (d + 1.0)
        omega = model.lam * r / math.sqrt(2.0)
        logpref = (math.log(2.0 * model.delta) - 0.5 * math.log(2.0 * math.pi)
                   - 0.5 * d * math.log(4.0 * math.pi)
                   + nu * (0.5 * math.log(2.0) + math.log(model.lam) - math.log(r)))
    return logpref, nu, omega


def _guarded_exp(operation: str, logv: float) -> float:
    if logv > _LOG_EXP_MAX:
        raise OverflowRangeError(operation, f"value ~ e^{logv:.1f} exceeds double range")
    if logv < _LOG_EXP_MIN:
        return 0.0
    return math.exp(logv)


def jump_density_bessel(spec: SubordinatedProcessSpec, r: float) -> float:
    """Closed Bessel-K form of the jump kernel; no quadrature involved."""
    rv = _check_radius("jump_density_bessel", r)
    logpref, nu, omega = _closed_form_pieces(spec, rv)
    kve = bessel_k_scaled(nu, omega)
    logv = logpref + math.log(kve) - omega
    if logv > _LOG_EXP_MAX:
        raise OverflowRangeError("jump_density_bessel", f"jump density at r={rv} exceeds double range")
    if logv < _LOG_EXP_MIN:
        return 0.0
    if omega <= 600.0 and abs(logpref) < 680.0:
        # direct product where everything is comfortably in range
        return math.exp(logpref) * bessel_k(nu, omega)
    return math.exp(logv)


def jump_density_asymptotic(spec: SubordinatedProcessSpec, r: float, regime: AsymptoticRegime,
                            constant_source: str = "derived") -> float:
    """Near-field / far-field power laws of the jump kernel.

    ``constant_source="derived"`` plugs the standard small/large argument
    Bessel limits into the closed form; ``"paper"`` reproduces the
    alternative published constants verbatim.  The two disagree; the
    ``adjudicate-constants`` verify suite quantifies which matches the
    defining integral.
    """
    rv = _check_radius("jump_density_asymptotic", r)
    if not isinstance(regime, AsymptoticRegime):
        raise DomainError("jump_density_asymptotic", f"unknown regime {regime!r}")
    if constant_source not in ("paper", "derived"):
        raise DomainError("jump_density_asymptotic",
                          f"constant_source must be 'paper' or 'derived', got {constant_source!r}")
    d = spec.dimension
    model = spec.model
    if constant_source == "derived":
        logpref, nu, omega = _closed_form_pieces(spec, rv)
        if regime is AsymptoticRegime.NEAR_ZERO:
            logv = logpref + math.log(0.5 * gamma_fn(nu)) + nu * (math.log(2.0) - math.log(omega))
        else:
            logv = logpref + 0.5 * (math.log(math.pi) - math.log(2.0 * omega)) - omega
        return _guarded_exp("jump_density_asymptotic", logv)
    if isinstance(model, TemperedStableParams):
        a = model.alpha
        c = model.levy_constant
        if regime is AsymptoticRegime.NEAR_ZERO:
            logv = ((a + 1.0) * math.log(4.0) - 0.5 * d * math.log(math.pi)
                    + math.log(a + 0.5 * d) + math.log(c) - (2.0 * a + d) * math.log(rv))
        else:
            logv = (0.5 * (2.0 * a - d + 1.0) * math.log(2.0)
                    + 0.25 * (2.0 * a + d - 1.0) * math.log(model.theta)
                    - 0.5 * (d - 1.0) * math.log(math.pi) + math.log(c)
                    - 0.5 * (2.0 * a + d - 1.0) * math.log(rv)
                    - math.sqrt(model.theta) * rv)
        return _guarded_exp("jump_density_asymptotic", logv)
    if regime is AsymptoticRegime.NEAR_ZERO:
        logv = (math.log(4.0 * model.delta * (d + 1.0))
                - 0.5 * (math.log(2.0) + (d + 1.0) * math.log(math.pi))
                - (d + 1.0) * math.log(rv))
    else:
        logv = (math.log(4.0 * model.delta) + 2.0 * d * math.log(0.5 * model.lam)
                - 0.5 * (math.log(2.0) + d * math.log(math.pi))
                - 0.5 * d * math.log(rv) - model.lam * rv / math.sqrt(2.0))
    return _guarded_exp("jump_density_asymptotic", logv)


def ball_average_green(spec: SubordinatedProcessSpec, r: float, ball_radius: float,
                       config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Average of G over a ball of radius ``ball_radius`` centered at radius r.

    This is the natural target of the occupation-time estimator in
    :mod:`levypot.montecarlo`.  Implemented for dimension 3, where the
    sphere-ball intersection area is elementary.
    """
    rv = _check_radius("ball_average_green", r)
    rho = float(ball_radius)
    if not (0.0 < rho < rv):
        raise DomainError("ball_average_green", f"ball radius must lie in (0, r), got {ball_radius}")
    if spec.dimension != 3:
        raise DimensionError("ball_average_green", "ball averaging implemented for dimension 3 only")

    def weighted(svals):
        out = np.empty_like(svals)
        for i, s in enumerate(svals):
            out[i] = green_function(spec, float(s), config) * (math.pi * s / rv) * (rho * rho - (rv - s) ** 2)
        return out

    # each integrand value already carries G's quadrature error, so the
    # radial average runs two orders looser than the pointwise target
    outer = QuadratureConfig(abs_tol=max(config.abs_tol * 100.0, 1e-12),
                             rel_tol=max(config.rel_tol * 100.0, 1e-8),
                             max_subdivisions=config.max_subdivisions,
                             tail_knot=config.tail_knot)
    volume = 4.0 / 3.0 * math.pi * rho ** 3
    return integrate_interval(weighted, rv - rho, rv + rho, outer).value / volume
