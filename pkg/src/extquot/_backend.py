"""Select the compiled kernels when built, else the pure-Python twins.

Set ``EXTQUOT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
wedge_trace_sums = _pykernels.wedge_trace_sums
lattice_orbit_data = _pykernels.lattice_orbit_data

if os.environ.get("EXTQUOT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        wedge_trace_sums = _ckernels.wedge_trace_sums
        lattice_orbit_data = _ckernels.lattice_orbit_data


def available_backends():
    """Map backend name -> kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        return out
    out["cython"] = _ckernels
    return out
