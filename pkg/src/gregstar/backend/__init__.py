"""Grid-scan kernel backend selection.

The compiled Cython kernels are preferred when the extension built; the
numpy implementation is the fallback.  Set ``GREGSTAR_PURE_PYTHON=1`` to
force the fallback (used by the backend-equivalence tests and benchmark).
"""

import os

if os.environ.get("GREGSTAR_PURE_PYTHON"):
    from . import _kernels_np as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_np as _impl

BACKEND = _impl.NAME
disk_quad_grid = _impl.disk_quad_grid
disk_quad_window_max = _impl.disk_quad_window_max
hankel_tau_max = _impl.hankel_tau_max

__all__ = ["BACKEND", "disk_quad_grid", "disk_quad_window_max",
           "hankel_tau_max"]
