"""Backend selection: numba-compiled kernels or their plain-numpy twins.

Every hot kernel in this package is written once, in a numba-compilable
subset of Python, and decorated with :func:`njit_maybe`.  When numba is
importable and ``LEVYPOT_NO_NUMBA`` is unset, the decorator is ``numba.njit``;
otherwise it is the identity and the very same code runs interpreted on
numpy.  Quadrature values and inverse-Gaussian draws reproduce bitwise
across the two modes; tempered-stable draws pass through vectorized
sin/pow, whose last-bit rounding can differ between the compiled and the
numpy evaluation, so those agree to rounding error (and in law) rather
than bit for bit.  Reruns within one mode are always bit-identical.
``scripts/benchmark_backends.py`` measures the speed difference.
"""

import os


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


FORCE_FALLBACK = _env_flag("LEVYPOT_NO_NUMBA")

if FORCE_FALLBACK:
    _numba = None
else:
    try:
        import numba as _numba
    except ImportError:
        _numba = None

NUMBA_ENABLED = _numba is not None

#: "numba" or "numpy"; surfaced in CLI output and the benchmark script.
BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def njit_maybe(*args, **kwargs):
    """``numba.njit`` under the numba backend, identity decorator otherwise.

    Works bare (``@njit_maybe``) and with options (``@njit_maybe(cache=True)``).
    """
    if args and callable(args[0]) and not kwargs:
        func = args[0]
        return _numba.njit(func) if NUMBA_ENABLED else func
    if NUMBA_ENABLED:
        return _numba.njit(*args, **kwargs)

    def identity(func):
        return func

    return identity
