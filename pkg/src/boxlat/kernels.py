"""Kernel selection.

The compiled extension is used when importable; set ``BOXLAT_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("BOXLAT_PURE_PYTHON"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py


def backends():
    """Available backend modules keyed by name (for benchmarks and tests)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:
        pass
    return out


principal_congruence = _impl.principal_congruence
principal_congruences = _impl.principal_congruences
close_bi_ideal = _impl.close_bi_ideal
