"""Kernel selection for the sparse-polynomial inner loops.

The compiled extension (lametop._speedups, built from _speedups.pyx) is used
when importable; otherwise the pure-Python implementation takes over.  Set
LAMETOP_KERNEL=python to force the fallback, LAMETOP_KERNEL=c to require the
extension.
"""

from __future__ import annotations

import os

from . import _kernel_py

_impl = _kernel_py

_requested = os.environ.get("LAMETOP_KERNEL", "").lower()
if _requested in ("", "c", "compiled"):
    try:
        from . import _speedups as _compiled

        _impl = _compiled
    except ImportError:
        if _requested:
            raise ImportError(
                "LAMETOP_KERNEL=c requested but the compiled kernel is not built; "
                "run `pip install -e . --no-build-isolation` with Cython available"
            )
elif _requested not in ("py", "python", "pure"):
    raise ValueError(f"unknown LAMETOP_KERNEL value {_requested!r}")


def available():
    """Names of the kernels importable in this environment."""
    names = ["python"]
    try:
        from . import _speedups  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    return names


def active_name():
    return _impl.IMPL


def use(name):
    """Switch the active kernel ('python' or 'c'); used by tests/benchmarks."""
    global _impl
    if name in ("py", "python", "pure"):
        _impl = _kernel_py
    elif name in ("c", "compiled"):
        from . import _speedups

        _impl = _speedups
    else:
        raise ValueError(f"unknown kernel {name!r}")


def mul_terms(a, b, nvars):
    return _impl.mul_terms(a, b, nvars)
