"""Selects the numeric kernel backend at import time.

The compiled extension (`specgap._kernels`) is preferred; the NumPy module
(`specgap._kernels_py`) is the fallback.  Setting the environment variable
``SPECGAP_PURE_PYTHON`` to a non-empty value forces the fallback, which is
how the test suite and the benchmark exercise both implementations.
"""

from __future__ import annotations

import os

if os.environ.get("SPECGAP_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

power_iteration = kernels.power_iteration
jacobi_eigh = kernels.jacobi_eigh


def backend_name() -> str:
    """Name of the kernel backend in use: ``"compiled"`` or ``"python"``."""
    return BACKEND
