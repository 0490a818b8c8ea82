"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python kernel takes over.  ``SPECTRA_BOUNDS_BACKEND=python`` forces the
fallback (useful for parity debugging and benchmarks), ``=c`` insists on the
extension.
"""

from __future__ import annotations

import os

from spectra_bounds import _eig_py
from spectra_bounds._eig_py import MAX_MASK_VERTICES, MAX_SWEEPS, ConvergenceError

_requested = os.environ.get("SPECTRA_BOUNDS_BACKEND", "").strip().lower()

if _requested in ("", "c", "compiled"):
    try:
        from spectra_bounds import _eig_c as _impl

        COMPILED = True
    except ImportError:
        if _requested:
            raise
        _impl = _eig_py
        COMPILED = False
elif _requested in ("py", "python", "pure"):
    _impl = _eig_py
    COMPILED = False
else:
    raise RuntimeError(
        f"SPECTRA_BOUNDS_BACKEND={_requested!r}: expected 'c' or 'python'"
    )

BACKEND = "compiled" if COMPILED else "python"

sym_eigenvalues = _impl.sym_eigenvalues
sym_eigensystem = _impl.sym_eigensystem
graph_spectra_batch = _impl.graph_spectra_batch

__all__ = [
    "BACKEND",
    "COMPILED",
    "MAX_MASK_VERTICES",
    "MAX_SWEEPS",
    "ConvergenceError",
    "graph_spectra_batch",
    "sym_eigenvalues",
    "sym_eigensystem",
]
