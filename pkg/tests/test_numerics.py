"""Special functions and the adaptive Gauss-Kronrod integrator."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levypot import (
    DomainError,
    IntegrandNaNError,
    OverflowRangeError,
    QuadratureConfig,
    bessel_k,
    bessel_k_scaled,
    erfc_asymptotic,
    erfc_fn,
    gamma_fn,
    integrate_interval,
    integrate_semi_infinite,
    laplace_transform_numeric,
)

# reference values computed with 20-digit arbitrary-precision arithmetic
GAMMA_1_5 = 0.88622692545275801365
ERFC_1 = 0.15729920705028513066
ERFC_NEG_1 = 1.8427007929497148693
K0_2 = 0.11389387274953343565
K1_1 = 0.60190723019723457474
K_HALF_1 = 0.46106850444789455844
K_3HALF_5 = 0.0045319360495714590714


def test_gamma_frozen_value():
    assert gamma_fn(1.5) == pytest.approx(GAMMA_1_5, rel=1e-15)


def test_gamma_rejects_nonpositive_and_overflow():
    with pytest.raises(DomainError):
        gamma_fn(0.0)
    with pytest.raises(DomainError):
        gamma_fn(-2.5)
    with pytest.raises(OverflowRangeError):
        gamma_fn(172.0)


def test_erfc_frozen_values():
    assert erfc_fn(1.0) == pytest.approx(ERFC_1, rel=1e-15)
    assert erfc_fn(-1.0) == pytest.approx(ERFC_NEG_1, rel=1e-15)


@given(st.floats(min_value=-10.0, max_value=10.0, allow_nan=False))
def test_erfc_reflection(x):
    assert erfc_fn(x) + erfc_fn(-x) == pytest.approx(2.0, abs=1e-15)


def test_erfc_asymptotic_partial_sums_bracket():
    # alternating series: even term counts overshoot, odd undershoot
    true = erfc_fn(5.0)
    assert erfc_asymptotic(5.0, 0) > true
    assert erfc_asymptotic(5.0, 1) < true
    assert erfc_asymptotic(5.0, 2) > true
    assert erfc_asymptotic(5.0, 3) < true
    assert erfc_asymptotic(5.0, 2) / true - 1.0 == pytest.approx(1.077293832e-4, rel=1e-6)


def test_erfc_asymptotic_rejects_bad_args():
    with pytest.raises(DomainError):
        erfc_asymptotic(-1.0, 2)
    with pytest.raises(DomainError):
        erfc_asymptotic(5.0, -1)


def test_bessel_k_frozen_values():
    assert bessel_k(0.0, 2.0) == pytest.approx(K0_2, rel=1e-14)
    assert bessel_k(1.0, 1.0) == pytest.approx(K1_1, rel=1e-14)
    assert bessel_k(0.5, 1.0) == pytest.approx(K_HALF_1, rel=1e-14)
    assert bessel_k(1.5, 5.0) == pytest.approx(K_3HALF_5, rel=1e-14)


def test_bessel_k_half_closed_form_deep_tail():
    # K_{1/2}(w) = sqrt(pi/(2w)) e^{-w}; w = 700 sits below the overflow
    # threshold of e^{-w} but far past where the direct evaluation dies
    w = 700.0
    expected = math.sqrt(math.pi / (2.0 * w)) * math.exp(-w)
    assert bessel_k(0.5, w) == pytest.approx(expected, rel=1e-12)


def test_bessel_k_scaled_consistent():
    for nu, w in ((0.0, 2.0), (1.5, 5.0), (2.5, 40.0)):
        assert bessel_k_scaled(nu, w) * math.exp(-w) == pytest.approx(bessel_k(nu, w), rel=1e-13)


def test_bessel_k_rejects_bad_args():
    with pytest.raises(DomainError):
        bessel_k(0.5, 0.0)
    with pytest.raises(DomainError):
        bessel_k(0.5, -1.0)
    with pytest.raises(OverflowRangeError):
        bessel_k(5.0, 1e-300)  # K_nu(w) ~ w^{-nu} overflows double range


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.25, max_value=3.0), st.floats(min_value=0.5, max_value=50.0))
def test_bessel_k_recurrence(nu, w):
    # K_{nu+2} = K_nu + 2(nu+1)/w * K_{nu+1}; all terms positive, no cancellation
    lhs = bessel_k(nu + 2.0, w)
    rhs = bessel_k(nu, w) + 2.0 * (nu + 1.0) / w * bessel_k(nu + 1.0, w)
    assert lhs == pytest.approx(rhs, rel=1e-11)


@pytest.mark.parametrize("a", [0.3, 0.7, 1.5, 2.5])
def test_semi_infinite_gamma_integral(a):
    def f(t):
        return t ** (a - 1.0) * np.exp(-t)

    sing = 1.0 - a if a < 1.0 else None
    res = integrate_semi_infinite(f, singularity_exponent=sing)
    assert res.value == pytest.approx(gamma_fn(a), rel=1e-12)
    # the reported error estimate must cover the true error on smooth input
    assert abs(res.value - gamma_fn(a)) <= max(res.error_estimate, 1e-15)


def test_interval_polynomial_is_machine_exact():
    res = integrate_interval(lambda x: x ** 6, 0.0, 1.0)
    assert res.value == pytest.approx(1.0 / 7.0, rel=1e-15)


def test_laplace_transform_of_exponential():
    for s in (0.5, 2.0):
        got = laplace_transform_numeric(lambda t: np.exp(-t), s)
        assert got == pytest.approx(1.0 / (1.0 + s), rel=1e-10)


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=0.1, max_value=3.0))
def test_semi_infinite_is_linear(c1, c2):
    f1 = lambda t: np.exp(-t)
    f2 = lambda t: t * np.exp(-2.0 * t)
    combo = integrate_semi_infinite(lambda t: c1 * f1(t) + c2 * f2(t)).value
    parts = c1 * integrate_semi_infinite(f1).value + c2 * integrate_semi_infinite(f2).value
    assert combo == pytest.approx(parts, rel=1e-10)


def test_nan_integrand_raises():
    def bad(t):
        out = np.exp(-t)
        out[t > 0.5] = np.nan
        return out

    with pytest.raises(IntegrandNaNError):
        integrate_semi_infinite(bad)


def test_quadrature_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureConfig(rel_tol=-1e-10)
    with pytest.raises(DomainError):
        QuadratureConfig(max_subdivisions=0)
    with pytest.raises(DomainError):
        QuadratureConfig(tail_knot=0.0)


def test_singularity_exponent_validation():
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda t: np.exp(-t), singularity_exponent=1.0)
    with pytest.raises(DomainError):
        integrate_interval(lambda t: t, 2.0, 1.0)
