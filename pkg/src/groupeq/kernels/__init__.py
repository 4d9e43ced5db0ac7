"""Hot evaluation kernels, numba-compiled with a pure-numpy fallback.

The numba backend is used when numba imports cleanly; set the environment
variable ``GROUPEQ_DISABLE_NUMBA=1`` before import to force the numpy
implementations.  ``benchmarks/benchmark_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

from . import _np as numpy_backend

DISABLE_ENV = "GROUPEQ_DISABLE_NUMBA"

_numba_backend = None
if os.environ.get(DISABLE_ENV, "").strip().lower() not in ("1", "true", "yes"):
    try:
        from . import _nb as _numba_backend  # noqa: F811
    except ImportError:
        _numba_backend = None

active = _numba_backend if _numba_backend is not None else numpy_backend
backend_name = "numba" if _numba_backend is not None else "numpy"

evolve_state = active.evolve_state
batch_membership = active.batch_membership
batch_first_witness = active.batch_first_witness


def backends() -> dict:
    """All importable backends by name, regardless of the env flag."""
    found = {"numpy": numpy_backend}
    try:
        from . import _nb

        found["numba"] = _nb
    except ImportError:
        pass
    return found
