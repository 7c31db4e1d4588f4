"""Numerical core: compiled extension when built, numpy fallback otherwise.

Set the environment variable ``VEHAZ_FORCE_FALLBACK=1`` before import to use
the pure-numpy implementations even when the extension is available.
"""

import os

from . import _fallback

if os.environ.get("VEHAZ_FORCE_FALLBACK") == "1":
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _fallback

kernel_eval = _impl.kernel_eval
kernel_deriv = _impl.kernel_deriv
hazard_grid = _impl.hazard_grid
polyline_min_dists = _impl.polyline_min_dists


def backend_name():
    """Name of the active numerical backend: 'compiled' or 'python'."""
    return _impl.backend
