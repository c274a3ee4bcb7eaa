"""Hot integer kernels behind the q-series code.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Set ``BACKEND`` to see which one is active.  A compiled call
that overflows int64 is transparently redone in pure Python.
"""
from __future__ import annotations

from . import _pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None

BACKEND = "native" if _native is not None else "pure"

__all__ = ["BACKEND", "convolve", "euler_inverse_power", "theta_counts", "backend_module"]


def backend_module(name: str | None = None):
    """The kernel module for ``name`` ("native" or "pure"); default is the active one."""
    name = name or BACKEND
    if name == "pure":
        return _pure
    if name == "native":
        if _native is None:
            raise ImportError("compiled kernels are not available")
        return _native
    raise ValueError(f"unknown kernel backend {name!r}")


def _dispatch(fname):
    pure = getattr(_pure, fname)
    if _native is None:
        return pure
    native = getattr(_native, fname)

    def call(*args):
        try:
            return native(*args)
        except OverflowError:
            return pure(*args)

    call.__name__ = fname
    call.__doc__ = pure.__doc__
    return call


convolve = _dispatch("convolve")
euler_inverse_power = _dispatch("euler_inverse_power")
theta_counts = _dispatch("theta_counts")
