"""Backend selection for the float tree kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python reference implementation in ``_kernels_py`` takes over.
Exact (rational) input always runs through the Python implementation.
"""

from contextlib import contextmanager

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE = ("compiled", "python") if _ckernels is not None else ("python",)
BACKEND = AVAILABLE[0]


def _impl():
    return _ckernels if BACKEND == "compiled" else _kernels_py


def set_backend(name):
    global BACKEND
    if name not in AVAILABLE:
        raise ValueError(f"backend {name!r} unavailable; choose from {AVAILABLE}")
    BACKEND = name


@contextmanager
def backend(name):
    old = BACKEND
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)


def descend_float(vals, slopes, shift, tol):
    vals = tuple(float(v) for v in vals)
    try:
        return _impl().descend(vals, slopes, float(shift), tol)[:2]
    except OverflowError:
        return _kernels_py.descend(vals, slopes, float(shift), tol)[:2]


def enumerate_float(vals, slopes, shift, k, tol, check=True):
    vals = tuple(float(v) for v in vals)
    try:
        return _impl().enumerate_values(vals, slopes, float(shift), k, tol, check)
    except OverflowError:
        return _kernels_py.enumerate_values(vals, slopes, float(shift), k, tol, check)
