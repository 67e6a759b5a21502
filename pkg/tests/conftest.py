"""Shared fixtures.

The session warm-up touches every jitted kernel once so compile time is
charged here and not to the timed acceptance tests.
"""

import pytest

from levypot import (
    InverseGaussianParams,
    PathConfig,
    RngState,
    SubordinatedProcessSpec,
    TemperedStableParams,
    estimate_green_function,
    estimate_potential_measure,
    green_function,
    jump_density,
    potential_density_exact,
    potential_measure,
    sample_ig_increments,
    sample_stable_increments,
    sample_tss_increments,
)
from levypot.subordinators import _laplace_of_exact_density, _levy_khintchine_numeric


@pytest.fixture(scope="session", autouse=True)
def warm_backend():
    tss = TemperedStableParams(0.5, 1.0)
    ig = InverseGaussianParams(1.0, 1.0)
    rng = RngState(0, 0)
    potential_density_exact(tss, 1.0)
    potential_density_exact(tss, 1e-12)  # small-x rescaled inner route
    potential_measure(tss, 1.0, 2.0)
    _laplace_of_exact_density(tss, 1.0)
    _levy_khintchine_numeric(tss, 1.0)
    _levy_khintchine_numeric(ig, 1.0)
    green_function(SubordinatedProcessSpec(tss, 3), 1.0)
    jump_density(SubordinatedProcessSpec(tss, 1), 1.0)
    jump_density(SubordinatedProcessSpec(ig, 1), 1.0)
    sample_stable_increments(0.5, 1.0, 8, rng)
    sample_tss_increments(tss, 1.0, 8, rng)
    sample_ig_increments(ig, 1.0, 8, rng)
    estimate_potential_measure(ig, 1.0, 2.0, PathConfig(0.1, 1.0, 4), rng)
    estimate_green_function(SubordinatedProcessSpec(ig, 3), 1.0, 0.3, PathConfig(0.1, 1.0, 4), rng)
