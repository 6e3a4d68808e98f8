"""Kernel backend selection.

Two interchangeable kernel sets exist: a numba-compiled one (fast, default
when numba imports cleanly) and a pure-numpy one.  The environment variable
BRAIDREP_BACKEND, read once at import, picks the initial backend; call
set_backend() to switch at runtime.  Words carry no backend state, so
switching mid-session is safe.
"""

import os

from . import _kernels_numpy

try:
    from . import _kernels_numba

    HAS_NUMBA = True
except ImportError:
    _kernels_numba = None
    HAS_NUMBA = False

_BACKENDS = {"numpy": _kernels_numpy}
if HAS_NUMBA:
    _BACKENDS["numba"] = _kernels_numba

_active_name = None
_active = None


def set_backend(name):
    """Select the kernel implementation, 'numba' or 'numpy'."""
    global _active_name, _active
    if name not in ("numba", "numpy"):
        raise ValueError("unknown backend %r; expected 'numba' or 'numpy'" % (name,))
    if name not in _BACKENDS:
        raise RuntimeError("backend %r requested but numba is not importable" % (name,))
    _active_name = name
    _active = _BACKENDS[name]


def backend_name():
    return _active_name


def kernels():
    return _active


_env = os.environ.get("BRAIDREP_BACKEND", "").strip()
if _env:
    set_backend(_env)
else:
    set_backend("numba" if HAS_NUMBA else "numpy")
