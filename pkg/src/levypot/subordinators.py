"""Tempered stable and inverse Gaussian subordinators.

Parameter conventions used throughout: the tempered stable family has
Laplace exponent phi(s) = (s + theta)^alpha - theta^alpha with stability
index alpha in (0, 1) and tempering rate theta > 0; the inverse Gaussian
family has phi(s) = delta (sqrt(2 s + lambda^2) - lambda).  The two meet at
alpha = 1/2: see :func:`tss_ig_equivalent`.

The exact potential density u (the density of the expected occupation
measure of the subordinator) is the central object here.  For the tempered
stable family it is a residue constant plus a branch-cut integral,

    u(x) = theta^{1-alpha}/alpha
         + e^{-theta x} (sin pi alpha / pi)
           * int_0^inf e^{-x v} v^alpha
             / ((v^alpha - theta^alpha cos pi alpha)^2
                + theta^{2 alpha} sin^2 pi alpha) dv,

whose Laplace transform is 1/phi(s) (the defining identity, enforced by the
verify suites).  For the inverse Gaussian family u has a closed form in the
complementary error function.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from . import _kernels as _k
from .errors import ConvergenceError, DomainError, IntegrandNaNError, OverflowRangeError
from .numerics import DEFAULT_QUADRATURE, QuadratureConfig

# past this point the family is numerically indistinguishable from its
# degenerate pure-drift limit and the branch-cut representation collapses
_ALPHA_DEGENERATE = 1.0 - 1e-6


class AsymptoticRegime(Enum):
    NEAR_ZERO = "zero"
    NEAR_INFINITY = "infinity"


@dataclass(frozen=True)
class TemperedStableParams:
    alpha: float
    theta: float

    def __post_init__(self):
        a = float(self.alpha)
        th = float(self.theta)
        if not (math.isfinite(a) and 0.0 < a < 1.0):
            raise DomainError("tempered_stable_params", f"index must lie in (0, 1), got {self.alpha}")
        if a > _ALPHA_DEGENERATE:
            raise DomainError("tempered_stable_params",
                              f"index {a} is within 1e-6 of the drift limit 1; not supported")
        if not (math.isfinite(th) and th > 0.0):
            raise DomainError("tempered_stable_params", f"tempering rate must be positive, got {self.theta}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "theta", th)

    @property
    def kind(self) -> str:
        return "tss"

    @property
    def levy_constant(self) -> float:
        """Prefactor alpha / Gamma(1 - alpha) of the Levy density."""
        return self.alpha / math.gamma(1.0 - self.alpha)


@dataclass(frozen=True)
class InverseGaussianParams:
    delta: float
    lam: float

    def __post_init__(self):
        d = float(self.delta)
        l = float(self.lam)
        if not (math.isfinite(d) and d > 0.0):
            raise DomainError("inverse_gaussian_params", f"delta must be positive, got {self.delta}")
        if not (math.isfinite(l) and l > 0.0):
            raise DomainError("inverse_gaussian_params", f"lambda must be positive, got {self.lam}")
        object.__setattr__(self, "delta", d)
        object.__setattr__(self, "lam", l)

    @property
    def kind(self) -> str:
        return "ig"


SubordinatorModel = Union[TemperedStableParams, InverseGaussianParams]


def model_descriptor(model: SubordinatorModel) -> dict:
    """Plain-dict form of the parameters, used by tables and CLI output."""
    if isinstance(model, TemperedStableParams):
        return {"kind": "tss", "alpha": model.alpha, "theta": model.theta}
    return {"kind": "ig", "delta": model.delta, "lam": model.lam}


def _code(model: SubordinatorModel, operation: str):
    if isinstance(model, TemperedStableParams):
        return _k.MODEL_TSS, model.alpha, model.theta
    if isinstance(model, InverseGaussianParams):
        return _k.MODEL_IG, model.delta, model.lam
    raise DomainError(operation, f"unsupported model type {type(model).__name__}")


def _check_positive(operation: str, name: str, value) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(operation, f"{name} must be positive and finite, got {value}")
    return value


def _raise_quadrature(operation: str, status: int, err: float, used: int):
    if status == 1:
        raise ConvergenceError(operation, f"error estimate {err:.3e} still above target after {used} subdivisions")
    if status == 2:
        raise IntegrandNaNError(operation, "integrand returned NaN")


def laplace_exponent(model: SubordinatorModel, s: float) -> float:
    """phi(s) for s >= 0; phi(0) = 0 exactly in both families."""
    sv = float(s)
    if not (math.isfinite(sv) and sv >= 0.0):
        raise DomainError("laplace_exponent", f"transform variable must be >= 0, got {s}")
    if isinstance(model, TemperedStableParams):
        # expm1/log1p form keeps full precision when s << theta
        return model.theta ** model.alpha * math.expm1(model.alpha * math.log1p(sv / model.theta))
    if isinstance(model, InverseGaussianParams):
        return model.delta * 2.0 * sv / (math.sqrt(2.0 * sv + model.lam ** 2) + model.lam)
    raise DomainError("laplace_exponent", f"unsupported model type {type(model).__name__}")


def _exp_formula(operation: str, log_pref: float, power: float, x: float, rate_x: float) -> float:
    """pref * x^power * e^{-rate_x}, overflow-checked; pref = e^{log_pref}."""
    logv = log_pref + power * math.log(x) - rate_x
    if logv > 709.0:
        raise OverflowRangeError(operation, f"value ~ e^{logv:.1f} exceeds double range")
    if logv < -745.0:
        return 0.0
    if logv > 700.0:
        return math.exp(logv)
    return math.exp(log_pref) * x ** power * math.exp(-rate_x)


def levy_density(model: SubordinatorModel, x: float) -> float:
    """Levy measure density at x > 0."""
    xv = _check_positive("levy_density", "x", x)
    if isinstance(model, TemperedStableParams):
        return _exp_formula("levy_density", math.log(model.levy_constant),
                            -model.alpha - 1.0, xv, model.theta * xv)
    if isinstance(model, InverseGaussianParams):
        return _exp_formula("levy_density", math.log(model.delta / math.sqrt(2.0 * math.pi)),
                            -1.5, xv, 0.5 * model.lam ** 2 * xv)
    raise DomainError("levy_density", f"unsupported model type {type(model).__name__}")


def potential_density_exact(model: SubordinatorModel, x: float,
                            config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Exact potential density u(x), x > 0.

    Inverse Gaussian evaluations are closed form; tempered stable ones run
    the branch-cut quadrature at the tolerances in ``config``.
    """
    xv = _check_positive("potential_density_exact", "x", x)
    kind, m1, m2 = _code(model, "potential_density_exact")
    if kind == _k.MODEL_IG:
        return _k._u_ig(xv, m1, m2)
    val, err, used, status = _k._u_tss_core(xv, m1, m2, config.abs_tol, config.rel_tol,
                                            int(config.max_subdivisions), config.tail_knot)
    _raise_quadrature("potential_density_exact", status, err, used)
    return val


def potential_density_asymptotic(model: SubordinatorModel, x: float, regime: AsymptoticRegime) -> float:
    """Leading-order behavior of u near 0 or near infinity."""
    xv = _check_positive("potential_density_asymptotic", "x", x)
    if not isinstance(regime, AsymptoticRegime):
        raise DomainError("potential_density_asymptotic", f"unknown regime {regime!r}")
    if isinstance(model, TemperedStableParams):
        if regime is AsymptoticRegime.NEAR_ZERO:
            return model.alpha / math.gamma(1.0 + model.alpha) * xv ** (model.alpha - 1.0)
        return model.theta ** (1.0 - model.alpha) / model.alpha
    if isinstance(model, InverseGaussianParams):
        if regime is AsymptoticRegime.NEAR_ZERO:
            return 1.0 / (model.delta * math.sqrt(2.0 * math.pi * xv))
        return model.lam / model.delta
    raise DomainError("potential_density_asymptotic", f"unsupported model type {type(model).__name__}")


def potential_measure(model: SubordinatorModel, a: float, b: float,
                      config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Expected occupation measure of [a, b]: the integral of u over it."""
    av = float(a)
    bv = float(b)
    if not (math.isfinite(av) and av >= 0.0):
        raise DomainError("potential_measure", f"left endpoint must be >= 0, got {a}")
    if not (math.isfinite(bv) and bv > av):
        raise DomainError("potential_measure", f"need a < b finite, got [{a}, {b}]")
    kind, m1, m2 = _code(model, "potential_measure")
    val, err, used, status = _k.potential_measure_value(kind, m1, m2, av, bv, config.abs_tol,
                                                        config.rel_tol, int(config.max_subdivisions),
                                                        config.tail_knot)
    _raise_quadrature("potential_measure", status, err, used)
    return val


def ig_pdf(params: InverseGaussianParams, x: float, t: float) -> float:
    """Marginal density of the inverse Gaussian subordinator at time t.

    This is the inverse Gaussian law with mean delta t / lambda and shape
    (delta t)^2, written in the first-passage parameterization.
    """
    if not isinstance(params, InverseGaussianParams):
        raise DomainError("ig_pdf", f"unsupported model type {type(params).__name__}")
    xv = _check_positive("ig_pdf", "x", x)
    tv = _check_positive("ig_pdf", "t", t)
    dt = params.delta * tv
    # single exp keeps the e^{delta t lambda} head from overflowing alone
    expo = dt * params.lam - 0.5 * (dt * dt / xv + params.lam ** 2 * xv)
    return _exp_formula("ig_pdf", math.log(dt / math.sqrt(2.0 * math.pi)) + expo, -1.5, xv, 0.0)


def tss_ig_equivalent(theta: float) -> InverseGaussianParams:
    """Inverse Gaussian parameters matching TemperedStableParams(1/2, theta).

    (s + theta)^{1/2} - theta^{1/2} = delta (sqrt(2 s + lambda^2) - lambda)
    for delta = 1/sqrt(2), lambda = sqrt(2 theta).
    """
    th = _check_positive("tss_ig_equivalent", "theta", theta)
    return InverseGaussianParams(1.0 / math.sqrt(2.0), math.sqrt(2.0 * th))


def _laplace_of_exact_density(model: SubordinatorModel, s: float,
                              config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Numeric L[u](s) via the nested kernel; should equal 1/phi(s)."""
    sv = _check_positive("laplace_of_exact_density", "s", s)
    kind, m1, m2 = _code(model, "laplace_of_exact_density")
    val, err, used, status = _k.laplace_of_potential(kind, m1, m2, sv, config.abs_tol,
                                                     config.rel_tol, int(config.max_subdivisions),
                                                     config.tail_knot)
    _raise_quadrature("laplace_of_exact_density", status, err, used)
    return val


def _levy_khintchine_numeric(model: SubordinatorModel, s: float,
                             config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Numeric integral of (1 - e^{-s x}) against the Levy density."""
    sv = float(s)
    if not (math.isfinite(sv) and sv >= 0.0):
        raise DomainError("levy_khintchine_numeric", f"transform variable must be >= 0, got {s}")
    if sv == 0.0:
        return 0.0
    kind, m1, m2 = _code(model, "levy_khintchine_numeric")
    c = model.levy_constant if kind == _k.MODEL_TSS else 0.0
    val, err, used, status = _k.levy_khintchine_value(kind, m1, m2, c, sv, config.abs_tol,
                                                      config.rel_tol, int(config.max_subdivisions),
                                                      config.tail_knot)
    _raise_quadrature("levy_khintchine_numeric", status, err, used)
    return val
