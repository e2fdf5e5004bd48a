"""JIT selection for the hot search kernels.

Kernels are written in the numba-compatible subset of Python. Setting
``P5GEM_DISABLE_JIT=1`` (or running without numba installed) leaves them as
plain Python functions operating on numpy arrays; results are identical,
only speed differs.
"""

import os

_disabled = os.environ.get("P5GEM_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    JIT_ENABLED = True
except ImportError:
    _njit = None
    JIT_ENABLED = False


def njit(func):
    """Compile ``func`` with numba when available, otherwise return it unchanged."""
    if _njit is None:
        return func
    return _njit(cache=True, nogil=True)(func)


def py_func(func):
    """Return the uncompiled Python implementation behind a kernel."""
    return getattr(func, "py_func", func)
