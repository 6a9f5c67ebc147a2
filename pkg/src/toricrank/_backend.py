"""Kernel backend selection.

The compiled extension is preferred when built; setting TORICRANK_PURE=1
in the environment forces the pure-Python kernels (used by the benchmark
and the backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("TORICRANK_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND_NAME: str = _impl.BACKEND_NAME
MAX_SCAN_EDGES: int = _kernels_py.MAX_SCAN_EDGES

bareiss_rank = _impl.bareiss_rank
circuit_scan = _impl.circuit_scan
fiber_solve = _impl.fiber_solve
