"""Kernel backend selection: compiled extension if present, else pure Python.

Set FOCKDUALITY_PURE=1 to force the pure-Python fallback.
"""

from __future__ import annotations

import os

if os.environ.get("FOCKDUALITY_PURE"):
    from . import _kernel_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl
        BACKEND = "python"

csc_matmul = _impl.csc_matmul
csc_lincomb = _impl.csc_lincomb
