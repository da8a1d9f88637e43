"""Optional numba acceleration.

Set ``TUZA_DISABLE_NUMBA=1`` to force the pure numpy / interpreted path.
Kernels decorated with :func:`njit` keep the undecorated function reachable
as ``.py_func`` in both modes, so tests and benchmarks can compare paths.
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("TUZA_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _FLAG not in ("", "0", "false", "no")

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

USE_NUMBA = _numba is not None and not DISABLED_BY_ENV


def njit(func=None, *, cache: bool = True):
    """``numba.njit`` when enabled, identity otherwise.

    Self-recursive kernels must pass ``cache=False``: numba's on-disk cache
    reloads them into a crashing state.
    """
    if func is None:
        return lambda f: njit(f, cache=cache)
    if USE_NUMBA:
        return _numba.njit(cache=cache)(func)
    func.py_func = func
    return func


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
