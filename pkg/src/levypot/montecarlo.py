"""Exact-increment Monte Carlo for the subordinators and their time changes.

Sampling is exact in distribution: positive stable increments come from
Kanter's representation, tempered stable ones from stable proposals thinned
by e^{-theta x} (acceptance rate e^{-theta^alpha t}, guarded), inverse
Gaussian ones from the Michael-Schucany-Haas root trick.  No Euler schemes
anywhere, so dt only controls time discretization of functionals, not the
law of the increments.

Randomness is pure-value: :class:`RngState` names a Philox stream by
(seed, stream_id) and never mutates.  Multi-path estimators give path i the
stream ``stream_id + i`` and reduce in path order, which makes every
estimate bit-reproducible and backend-independent.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from ._backend import njit_maybe
from .errors import DimensionError, DomainError, EfficiencyError
from .numerics import DEFAULT_QUADRATURE, QuadratureConfig
from .subordinators import (
    AsymptoticRegime,
    InverseGaussianParams,
    SubordinatorModel,
    TemperedStableParams,
    potential_density_asymptotic,
    potential_density_exact,
    _code,
)
from .heatkernel import SubordinatedProcessSpec

_TWO64 = 2 ** 64

# working floor for the thinning acceptance rate e^{-theta^alpha t}: beyond
# this exponent fewer than one proposal in 5e8 survives
_TSS_GUARD = 20.0

_ALPHA_DEGENERATE = 1.0 - 1e-6


@dataclass(frozen=True)
class RngState:
    """Pure-value handle on a Philox counter stream."""

    seed: int
    stream_id: int = 0

    def __post_init__(self):
        for name in ("seed", "stream_id"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise DomainError("rng_state", f"{name} must be an integer, got {v!r}")
            if not (0 <= int(v) < _TWO64):
                raise DomainError("rng_state", f"{name} must lie in [0, 2^64), got {v}")
            object.__setattr__(self, name, int(v))

    def substream(self, offset: int) -> "RngState":
        return RngState(self.seed, (self.stream_id + int(offset)) % _TWO64)

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed, self.stream_id], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class PathConfig:
    dt: float
    horizon: float
    n_paths: int = 1

    def __post_init__(self):
        dt = float(self.dt)
        hz = float(self.horizon)
        if not (math.isfinite(dt) and dt > 0.0):
            raise DomainError("path_config", f"dt must be positive, got {self.dt}")
        if not (math.isfinite(hz) and hz >= dt):
            raise DomainError("path_config", f"horizon must be >= dt, got {self.horizon}")
        if isinstance(self.n_paths, bool) or not isinstance(self.n_paths, (int, np.integer)):
            raise DomainError("path_config", f"n_paths must be an integer, got {self.n_paths!r}")
        if self.n_paths < 1:
            raise DomainError("path_config", f"n_paths must be >= 1, got {self.n_paths}")
        object.__setattr__(self, "dt", dt)
        object.__setattr__(self, "horizon", hz)
        object.__setattr__(self, "n_paths", int(self.n_paths))

    @property
    def n_steps(self) -> int:
        return max(1, int(math.floor(self.horizon / self.dt + 1e-9)))


@dataclass(frozen=True)
class Estimate:
    """A Monte Carlo estimate with its sampling error.

    ``censored_fraction`` is the share of paths truncated by the horizon
    (such estimates are biased low); ``bias_bound``, when not None, is a
    conservative estimate of the absolute truncation bias.
    """

    value: float
    std_error: float
    n_samples: int
    censored_fraction: float = 0.0
    bias_bound: float | None = None

    def __post_init__(self):
        if not (self.std_error >= 0.0):
            raise DomainError("estimate", f"std_error must be >= 0, got {self.std_error}")
        if self.n_samples < 1:
            raise DomainError("estimate", f"n_samples must be >= 1, got {self.n_samples}")
        if not (0.0 <= self.censored_fraction <= 1.0):
            raise DomainError("estimate", f"censored_fraction must lie in [0, 1], got {self.censored_fraction}")


# ---------------------------------------------------------------------------
# increment kernels


@njit_maybe(cache=True)
def _stable_fill(gen, out, alpha, t):
    """Kanter's representation of the positive stable law E e^{-sX} = e^{-t s^alpha}."""
    n = out.shape[0]
    # U = pi * uniform; clip away the measure-zero endpoints before sin()
    u = np.pi * np.maximum(gen.random(n), 1e-16)
    e = np.maximum(gen.standard_exponential(n), 1e-300)
    a_num = np.sin(alpha * u) ** (alpha / (1.0 - alpha)) * np.sin((1.0 - alpha) * u)
    a_den = np.sin(u) ** (1.0 / (1.0 - alpha))
    out[:] = t ** (1.0 / alpha) * (a_num / (a_den * e)) ** ((1.0 - alpha) / alpha)


@njit_maybe(cache=True)
def _tss_fill(gen, out, alpha, theta, t):
    """Stable proposals thinned by e^{-theta x}; draws sized to the acceptance rate."""
    n = out.shape[0]
    rate = math.exp(-theta ** alpha * t)
    filled = 0
    while filled < n:
        want = n - filled
        m = int(want / rate) + 1
        if m > 4 * want + 1024:
            m = 4 * want + 1024
        if m > 8000000:
            m = 8000000
        x = np.empty(m)
        _stable_fill(gen, x, alpha, t)
        keep = x[gen.random(m) < np.exp(-theta * x)]
        k = keep.shape[0]
        if k > want:
            k = want
        out[filled:filled + k] = keep[:k]
        filled += k


@njit_maybe(cache=True)
def _ig_fill(gen, out, delta, lam, t):
    """Michael-Schucany-Haas; the smaller quadratic root in cancellation-free form."""
    n = out.shape[0]
    mu = delta * t / lam
    shp = (delta * t) ** 2
    z = gen.standard_normal(n)
    u = gen.random(n)
    w = mu * z * z
    denom = w + np.sqrt(w * (w + 4.0 * shp))
    # denom == 0 only when z drew exactly 0; the root degenerates to mu there
    x1 = np.where(denom > 0.0, mu * (1.0 - 2.0 * w / denom), mu)
    out[:] = np.where(u * (mu + x1) <= mu, x1, mu * mu / x1)


@njit_maybe(cache=True)
def _fill_increments(gen, out, kind, m1, m2, dt):
    if kind == 0:
        _tss_fill(gen, out, m1, m2, dt)
    else:
        _ig_fill(gen, out, m1, m2, dt)


@njit_maybe(cache=True)
def _passage_pair(gen, kind, m1, m2, dt, max_steps, a, b):
    """Grid steps at which the running sum first exceeds a and b.

    Censored passages (not reached by the horizon) report max_steps.
    Returns (step_a, step_b, censored).
    """
    level = 0.0
    ka = 0 if a <= 0.0 else -1
    kb = -1
    k = 0
    while k < max_steps and kb < 0:
        m = max_steps - k
        if m > 512:
            m = 512
        x = np.empty(m)
        _fill_increments(gen, x, kind, m1, m2, dt)
        cum = np.cumsum(x) + level
        if ka < 0:
            hit_a = cum > a
            if np.any(hit_a):
                ka = k + int(np.argmax(hit_a)) + 1
        hit_b = cum > b
        if np.any(hit_b):
            kb = k + int(np.argmax(hit_b)) + 1
        level = cum[m - 1]
        k += m
    censored = 0
    if kb < 0:
        censored = 1
        kb = max_steps
        if ka < 0:
            ka = max_steps
    return ka, kb, censored


@njit_maybe(cache=True)
def _ball_occupation(gen, kind, m1, m2, d, dt, max_steps, r, rho):
    """Time the subordinated BM spends in the ball of radius rho at distance r."""
    occ = 0.0
    pos = np.zeros(d)
    rho2 = rho * rho
    k = 0
    while k < max_steps:
        m = max_steps - k
        if m > 512:
            m = 512
        ds = np.empty(m)
        _fill_increments(gen, ds, kind, m1, m2, dt)
        z = gen.standard_normal((m, d))
        sig = np.sqrt(2.0 * ds)
        dist2 = np.zeros(m)
        for c in range(d):
            col = np.cumsum(z[:, c] * sig) + pos[c]
            if c == 0:
                dist2 += (col - r) ** 2
            else:
                dist2 += col * col
            pos[c] = col[m - 1]
        occ += dt * np.sum(dist2 <= rho2)
        k += m
    return occ


# ---------------------------------------------------------------------------
# public sampling API


def _check_rng(operation: str, rng) -> RngState:
    if not isinstance(rng, RngState):
        raise DomainError(operation, f"rng must be an RngState, got {type(rng).__name__}")
    return rng


def _check_time(operation: str, t) -> float:
    tv = float(t)
    if not (math.isfinite(tv) and tv > 0.0):
        raise DomainError(operation, f"time increment must be positive, got {t}")
    return tv


def _check_count(operation: str, n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(operation, f"draw count must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(operation, f"draw count must be >= 1, got {n}")
    return int(n)


def _check_tss_step(operation: str, alpha: float, theta: float, t: float):
    load = theta ** alpha * t
    if load > _TSS_GUARD:
        raise EfficiencyError(operation,
                              f"thinning acceptance rate exp(-{load:.3g}) is below the working floor "
                              f"exp(-{_TSS_GUARD:g}); reduce the step or the tempering")


def sample_stable_increments(alpha: float, t: float, n: int, rng: RngState) -> np.ndarray:
    """n independent increments of the standard positive alpha-stable subordinator over time t."""
    a = float(alpha)
    if not (math.isfinite(a) and 0.0 < a < 1.0):
        raise DomainError("sample_stable_increment", f"index must lie in (0, 1), got {alpha}")
    if a > _ALPHA_DEGENERATE:
        raise DomainError("sample_stable_increment", f"index {a} is within 1e-6 of the drift limit 1")
    tv = _check_time("sample_stable_increment", t)
    nv = _check_count("sample_stable_increment", n)
    rng = _check_rng("sample_stable_increment", rng)
    out = np.empty(nv)
    _stable_fill(rng.generator(), out, a, tv)
    return out


def sample_stable_increment(alpha: float, t: float, rng: RngState) -> float:
    return float(sample_stable_increments(alpha, t, 1, rng)[0])


def sample_tss_increments(params: TemperedStableParams, t: float, n: int, rng: RngState) -> np.ndarray:
    if not isinstance(params, TemperedStableParams):
        raise DomainError("sample_tss_increment", f"expected TemperedStableParams, got {type(params).__name__}")
    tv = _check_time("sample_tss_increment", t)
    nv = _check_count("sample_tss_increment", n)
    rng = _check_rng("sample_tss_increment", rng)
    _check_tss_step("sample_tss_increment", params.alpha, params.theta, tv)
    out = np.empty(nv)
    _tss_fill(rng.generator(), out, params.alpha, params.theta, tv)
    return out


def sample_tss_increment(params: TemperedStableParams, t: float, rng: RngState) -> float:
    return float(sample_tss_increments(params, t, 1, rng)[0])


def sample_ig_increments(params: InverseGaussianParams, t: float, n: int, rng: RngState) -> np.ndarray:
    if not isinstance(params, InverseGaussianParams):
        raise DomainError("sample_ig_increment", f"expected InverseGaussianParams, got {type(params).__name__}")
    tv = _check_time("sample_ig_increment", t)
    nv = _check_count("sample_ig_increment", n)
    rng = _check_rng("sample_ig_increment", rng)
    out = np.empty(nv)
    _ig_fill(rng.generator(), out, params.delta, params.lam, tv)
    return out


def sample_ig_increment(params: InverseGaussianParams, t: float, rng: RngState) -> float:
    return float(sample_ig_increments(params, t, 1, rng)[0])


def _model_fill_args(operation: str, model: SubordinatorModel, dt: float):
    kind, m1, m2 = _code(model, operation)
    if kind == _k.MODEL_TSS:
        _check_tss_step(operation, m1, m2, dt)
    return kind, m1, m2


def simulate_path(model: SubordinatorModel, config: PathConfig, rng: RngState):
    """One subordinator path on the dt-grid; returns (times, levels), levels[0] = 0."""
    rng = _check_rng("simulate_path", rng)
    kind, m1, m2 = _model_fill_args("simulate_path", model, config.dt)
    n = config.n_steps
    inc = np.empty(n)
    _fill_increments(rng.generator(), inc, kind, m1, m2, config.dt)
    levels = np.empty(n + 1)
    levels[0] = 0.0
    np.cumsum(inc, out=levels[1:])
    times = np.arange(n + 1) * config.dt
    return times, levels


def sample_subordinated_bm(spec: SubordinatedProcessSpec, config: PathConfig, rng: RngState):
    """One path of Brownian motion run on the subordinator clock.

    Returns (times, points) with points of shape (n_steps + 1, dimension).
    Each grid displacement is N(0, 2 * dS) per coordinate, dS the
    subordinator increment; draws consume the stream in the order
    (all subordinator increments, then all normals).
    """
    rng = _check_rng("sample_subordinated_bm", rng)
    kind, m1, m2 = _model_fill_args("sample_subordinated_bm", spec.model, config.dt)
    d = spec.dimension
    n = config.n_steps
    gen = rng.generator()
    ds = np.empty(n)
    _fill_increments(gen, ds, kind, m1, m2, config.dt)
    z = gen.standard_normal((n, d))
    disp = z * np.sqrt(2.0 * ds)[:, None]
    points = np.empty((n + 1, d))
    points[0] = 0.0
    np.cumsum(disp, axis=0, out=points[1:])
    times = np.arange(n + 1) * config.dt
    return times, points


# ---------------------------------------------------------------------------
# estimators


def estimate_potential_measure(model: SubordinatorModel, a: float, b: float,
                               config: PathConfig, rng: RngState) -> Estimate:
    """Expected occupation time of [a, b] via first-passage differences.

    Each path contributes dt * (passage step of b - passage step of a).
    Paths that never clear b inside the horizon are truncated there and
    counted in ``censored_fraction``; censoring biases the estimate low.
    """
    av = float(a)
    bv = float(b)
    if not (math.isfinite(av) and av >= 0.0):
        raise DomainError("estimate_potential_measure", f"left endpoint must be >= 0, got {a}")
    if not (math.isfinite(bv) and bv > av):
        raise DomainError("estimate_potential_measure", f"need a < b finite, got [{a}, {b}]")
    rng = _check_rng("estimate_potential_measure", rng)
    kind, m1, m2 = _model_fill_args("estimate_potential_measure", model, config.dt)
    n = config.n_paths
    steps = config.n_steps
    occ = np.empty(n)
    censored = 0
    for i in range(n):
        gen = rng.substream(i).generator()
        ka, kb, cen = _passage_pair(gen, kind, m1, m2, config.dt, steps, av, bv)
        occ[i] = (kb - ka) * config.dt
        censored += cen
    value = float(occ.mean())
    se = float(occ.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return Estimate(value, se, n, censored / n, None)


def _green_tail_bound(spec: SubordinatedProcessSpec, r: float, rho: float, horizon: float) -> float:
    """Conservative estimate of the Green mass beyond the horizon.

    First-order model: the subordinator runs at its mean speed, so the
    missing operational time beyond the horizon starts near mean(S_T).  The
    fluctuation factor compensates the convexity of the heat kernel in its
    time argument (paths slower than the mean see a larger kernel), and the
    final factor of two covers what the second-order picture still misses.
    """
    model = spec.model
    mean_rate = _drift_rate(model)
    var_rate = _variance_rate(model)
    s_cap = mean_rate * horizon
    u_inf = potential_density_asymptotic(model, 1.0, AsymptoticRegime.NEAR_INFINITY)
    d = spec.dimension
    edge = r - rho
    if d == 3:
        base = u_inf * (4.0 * math.pi) ** -1.5 * (2.0 * math.sqrt(math.pi) / edge) \
            * math.erf(edge / (2.0 * math.sqrt(s_cap)))
    else:
        base = u_inf * (4.0 * math.pi) ** (-0.5 * d) * s_cap ** (1.0 - 0.5 * d) / (0.5 * d - 1.0)
    fluct = 1.0 + 1.875 * var_rate / (mean_rate * mean_rate * horizon)
    return 2.0 * base * fluct


def _drift_rate(model: SubordinatorModel) -> float:
    """Mean of the subordinator at unit time (derivative of the exponent at 0)."""
    if isinstance(model, TemperedStableParams):
        return model.alpha * model.theta ** (model.alpha - 1.0)
    return model.delta / model.lam


def _variance_rate(model: SubordinatorModel) -> float:
    """Variance of the subordinator at unit time."""
    if isinstance(model, TemperedStableParams):
        return model.alpha * (1.0 - model.alpha) * model.theta ** (model.alpha - 2.0)
    return model.delta / model.lam ** 3


def estimate_green_function(spec: SubordinatedProcessSpec, r: float, ball_radius: float,
                            config: PathConfig, rng: RngState) -> Estimate:
    """Green function via occupation time of a small ball at distance r.

    The estimate targets the ball average of G (bias O(ball_radius^2) against
    the pointwise value) and misses the mass beyond the horizon; ``bias_bound``
    carries a conservative estimate of that missing part.
    """
    rv = float(r)
    if not (math.isfinite(rv) and rv > 0.0):
        raise DomainError("estimate_green_function", f"radius must be positive, got {r}")
    rho = float(ball_radius)
    if not (0.0 < rho < rv):
        raise DomainError("estimate_green_function", f"ball radius must lie in (0, r), got {ball_radius}")
    if spec.dimension < 3:
        raise DimensionError("estimate_green_function", f"needs dimension >= 3, got {spec.dimension}")
    rng = _check_rng("estimate_green_function", rng)
    kind, m1, m2 = _model_fill_args("estimate_green_function", spec.model, config.dt)
    d = spec.dimension
    n = config.n_paths
    steps = config.n_steps
    # d-ball volume: pi^{d/2} rho^d / Gamma(d/2 + 1)
    volume = math.pi ** (0.5 * d) * rho ** d / math.gamma(0.5 * d + 1.0)
    occ = np.empty(n)
    for i in range(n):
        gen = rng.substream(i).generator()
        occ[i] = _ball_occupation(gen, kind, m1, m2, d, config.dt, steps, rv, rho)
    occ /= volume
    value = float(occ.mean())
    se = float(occ.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    bound = _green_tail_bound(spec, rv, rho, steps * config.dt)
    return Estimate(value, se, n, 0.0, bound)
