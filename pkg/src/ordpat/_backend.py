"""Kernel backend selection.

The two hot kernels (window pattern coding and the O(m^2) dominance scan)
exist twice: a numba ``@njit`` version and a pure-numpy version.  The env
variable ``ORDPAT_BACKEND`` picks one:

* unset or ``auto`` -- numba when importable, numpy otherwise;
* ``numba``         -- force numba, raise if it is unavailable;
* ``numpy``         -- force the vectorized numpy fallback.

Both backends return bit-identical integer results; they differ only in
speed (see ``benchmarks/benchmark_backends.py``).
"""

from __future__ import annotations

import os


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def resolve_backend_name(flag: str | None = None) -> str:
    flag = (flag if flag is not None else os.environ.get("ORDPAT_BACKEND", "auto")).lower()
    if flag in ("", "auto"):
        return "numba" if _numba_available() else "numpy"
    if flag == "numba":
        if not _numba_available():
            raise ImportError("ORDPAT_BACKEND=numba but numba is not installed")
        return "numba"
    if flag == "numpy":
        return "numpy"
    raise ValueError(f"unknown ORDPAT_BACKEND value: {flag!r}")


def load_kernels(name: str | None = None):
    """Return the kernel module for `name` (or the environment's choice)."""
    resolved = resolve_backend_name(name)
    if resolved == "numba":
        from ordpat import _kernels_numba as mod
    else:
        from ordpat import _kernels_numpy as mod
    return mod


_active = None


def kernels():
    """The process-wide active kernel module (resolved once, lazily)."""
    global _active
    if _active is None:
        _active = load_kernels()
    return _active


def active_backend_name() -> str:
    return kernels().BACKEND_NAME
