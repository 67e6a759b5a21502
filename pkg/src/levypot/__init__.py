"""Potential theory for subordinate Brownian motion.

Two subordinator families (tempered stable and inverse Gaussian) with
exact potential densities, jump kernels of the subordinate process in
closed Bessel form and by quadrature, Green functions, asymptotic laws
with adjudicated constants, path simulation, and Monte Carlo estimators.

Hot kernels are jitted with numba when it is installed; set
``LEVYPOT_NO_NUMBA=1`` to force the pure numpy/python path.
"""

from ._backend import BACKEND, NUMBA_ENABLED
from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    EfficiencyError,
    IntegrandNaNError,
    LevyPotError,
    OverflowRangeError,
    QuadratureError,
)
from .heatkernel import (
    SubordinatedProcessSpec,
    ball_average_green,
    green_asymptotic,
    green_function,
    heat_kernel,
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
    sample_ig_increment,
    sample_ig_increments,
    sample_stable_increment,
    sample_stable_increments,
    sample_subordinated_bm,
    sample_tss_increment,
    sample_tss_increments,
    simulate_path,
)
from .numerics import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    QuadratureResult,
    bessel_k,
    bessel_k_scaled,
    erfc_asymptotic,
    erfc_fn,
    gamma_fn,
    integrate_interval,
    integrate_semi_infinite,
    laplace_transform_numeric,
)
from .reporting import (DensityTable, TABLE_QUANTITIES, VerifyCase, VerifyReport,
                        canonical_json, format_number)
from .subordinators import (
    AsymptoticRegime,
    InverseGaussianParams,
    TemperedStableParams,
    ig_pdf,
    laplace_exponent,
    levy_density,
    model_descriptor,
    potential_density_asymptotic,
    potential_density_exact,
    potential_measure,
    tss_ig_equivalent,
)
from .verify import SUITE_NAMES, run_suites

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "NUMBA_ENABLED",
    "LevyPotError",
    "DomainError",
    "DimensionError",
    "OverflowRangeError",
    "QuadratureError",
    "ConvergenceError",
    "IntegrandNaNError",
    "EfficiencyError",
    "QuadratureConfig",
    "QuadratureResult",
    "DEFAULT_QUADRATURE",
    "gamma_fn",
    "erfc_fn",
    "erfc_asymptotic",
    "bessel_k",
    "bessel_k_scaled",
    "integrate_interval",
    "integrate_semi_infinite",
    "laplace_transform_numeric",
    "AsymptoticRegime",
    "TemperedStableParams",
    "InverseGaussianParams",
    "model_descriptor",
    "laplace_exponent",
    "levy_density",
    "potential_density_exact",
    "potential_density_asymptotic",
    "potential_measure",
    "ig_pdf",
    "tss_ig_equivalent",
    "SubordinatedProcessSpec",
    "heat_kernel",
    "green_function",
    "green_asymptotic",
    "ball_average_green",
    "jump_density",
    "jump_density_bessel",
    "jump_density_asymptotic",
    "RngState",
    "PathConfig",
    "Estimate",
    "sample_stable_increment",
    "sample_stable_increments",
    "sample_tss_increment",
    "sample_tss_increments",
    "sample_ig_increment",
    "sample_ig_increments",
    "simulate_path",
    "sample_subordinated_bm",
    "estimate_potential_measure",
    "estimate_green_function",
    "DensityTable",
    "TABLE_QUANTITIES",
    "VerifyCase",
    "VerifyReport",
    "canonical_json",
    "format_number",
    "SUITE_NAMES",
    "run_suites",
    "__version__",
]
