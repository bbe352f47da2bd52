"""Backend selection for the split scanner.

The compiled extension is used when it was built; setting
``DEPDISJ_PURE_PYTHON=1`` forces the pure-Python implementation.
"""

import os

from . import _pyscan

PyScanner = _pyscan.Scanner

try:
    from ._cscan import Scanner as CScanner
except ImportError:  # extension not built
    CScanner = None

if CScanner is not None and os.environ.get("DEPDISJ_PURE_PYTHON", "") in ("", "0"):
    Scanner = CScanner
    BACKEND = "cython"
else:
    Scanner = PyScanner
    BACKEND = "python"


def make_scanner(codes, ncols, backend=None):
    """Scanner over ``codes`` using ``backend`` ('cython', 'python' or the default)."""
    if backend is None:
        cls = Scanner
    elif backend == "python":
        cls = PyScanner
    elif backend == "cython":
        if CScanner is None:
            raise RuntimeError("the compiled scanner is not available")
        cls = CScanner
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if cls is CScanner and ncols > 64:
        cls = PyScanner
    return cls(codes, ncols)
