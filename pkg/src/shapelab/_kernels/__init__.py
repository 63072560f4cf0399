"""Hot-kernel backend selection.

The numba backend is the default; set ``SHAPELAB_BACKEND=numpy`` to force the
vectorized numpy fallback (or ``numba``/``auto`` explicitly). Selection
happens once at import. ``SHAPELAB_THREADS`` caps the numba threading layer;
kernels themselves are serial so results do not depend on it.
"""
from __future__ import annotations

import os

_choice = os.environ.get("SHAPELAB_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"SHAPELAB_BACKEND must be auto|numba|numpy, got {_choice!r}")

if _choice == "numpy":
    from . import numpy_impl as _impl
else:
    try:
        import numba as _numba

        _threads = os.environ.get("SHAPELAB_THREADS")
        if _threads:
            _numba.set_num_threads(max(1, min(int(_threads), _numba.config.NUMBA_NUM_THREADS)))
        from . import numba_impl as _impl
    except ImportError:
        if _choice == "numba":
            raise
        from . import numpy_impl as _impl

BACKEND = _impl.BACKEND_NAME
p1_local_matrices = _impl.p1_local_matrices
grad_of = _impl.grad_of
idw_blend = _impl.idw_blend
component_count = _impl.component_count
