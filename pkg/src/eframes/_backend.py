"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module is used.  ``EFRAMES_PURE_PYTHON=1`` forces
the fallback.
"""
import os

from . import _kernels_py

kernels = _kernels_py
if not os.environ.get("EFRAMES_PURE_PYTHON"):
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = kernels.BACKEND


def available_backends():
    """Return the kernel modules importable in this environment, keyed by name."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        return found
    found["cython"] = _kernels
    return found
