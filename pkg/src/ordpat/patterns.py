"""Ordinal pattern extraction, coding, and counting.

The ordinal pattern of a window ``(x_0, ..., x_h)`` is the permutation
``(pi_0, ..., pi_h)`` of positions satisfying ``x_{pi_0} >= ... >= x_{pi_h}``,
with ties resolved by requiring ``pi_{j-1} > pi_j`` whenever the two values
are equal.  Patterns are stored as Lehmer codes (factorial number system) of
the permutation word, so the code space for order ``h`` is
``0 .. (h+1)! - 1`` and distributions are dense integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from ordpat._backend import kernels
from ordpat.errors import (
    InsufficientData,
    InvalidCode,
    InvalidInput,
    OrderMismatch,
    UnsupportedOrder,
)

#: Largest supported pattern order; (HMAX+1)! = 362880 distribution cells.
HMAX = 8


def _check_order(h: int) -> int:
    if not isinstance(h, (int, np.integer)):
        raise UnsupportedOrder(f"pattern order must be an integer, got {h!r}")
    if h < 1 or h > HMAX:
        raise UnsupportedOrder(f"pattern order must be in [1, {HMAX}], got {h}")
    return int(h)


def _as_finite_1d(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInput(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput(f"{name} contains non-finite values")
    return arr


def series_windows(series, h: int) -> np.ndarray:
    """All overlapping windows of length h+1 as an (n-h, h+1) matrix."""
    h = _check_order(h)
    x = _as_finite_1d(series, "series")
    if x.size < h + 1:
        raise InsufficientData(
            f"series of length {x.size} is too short for order {h} (need >= {h + 1})"
        )
    return np.ascontiguousarray(np.lib.stride_tricks.sliding_window_view(x, h + 1))


def encode_pattern(window) -> int:
    """Pattern code of one window of length h+1.

    The code is the Lehmer code of the permutation sorting the window
    descending (ties toward the later position first); code 0 is the
    identity word ``(0, 1, ..., h)``, i.e. the decreasing window.
    """
    w = _as_finite_1d(window, "window")
    _check_order(w.size - 1)
    return int(kernels().codes_for_windows(w[None, :])[0])


def decode_pattern(code: int, h: int) -> tuple[int, ...]:
    """Permutation word for a pattern code of order h (inverse of encode)."""
    h = _check_order(h)
    size = factorial(h + 1)
    if not isinstance(code, (int, np.integer)) or not (0 <= code < size):
        raise InvalidCode(f"code {code!r} out of range [0, {size}) for order {h}")
    rest = list(range(h + 1))
    word = []
    c = int(code)
    for j in range(h, -1, -1):
        f = factorial(j)
        idx, c = divmod(c, f)
        word.append(rest.pop(idx))
    return tuple(word)


def codes_for_windows(windows) -> np.ndarray:
    """Pattern codes for each row of an (m, h+1) window matrix."""
    wins = np.asarray(windows, dtype=np.float64)
    if wins.ndim != 2:
        raise InvalidInput(f"windows must be 2-d, got shape {wins.shape}")
    _check_order(wins.shape[1] - 1)
    if not np.all(np.isfinite(wins)):
        raise InvalidInput("windows contain non-finite values")
    if wins.shape[0] == 0:
        raise InsufficientData("no windows given")
    return kernels().codes_for_windows(wins)


def pattern_sequence(series, h: int, shift: int = 0) -> np.ndarray:
    """Pattern codes of the sliding windows starting at offset `shift`.

    For a series of length n this yields ``n - h - shift`` codes, one per
    window start ``shift, ..., n - h - 1`` (0-based).  ``shift=0`` is the
    plain sliding-window case.
    """
    h = _check_order(h)
    if shift < 0:
        raise InvalidInput(f"shift must be >= 0, got {shift}")
    x = _as_finite_1d(series, "series")
    if x.size < h + 1 + shift:
        raise InsufficientData(
            f"series of length {x.size} too short for order {h} with shift {shift}"
        )
    return codes_for_windows(series_windows(x[shift:], h))


@dataclass(frozen=True)
class PatternDistribution:
    """Pattern frequency table for one series: counts over all (h+1)! codes."""

    h: int
    counts: np.ndarray
    n: int

    @property
    def frequencies(self) -> np.ndarray:
        """Relative frequencies; sums to 1."""
        return self.counts / self.n


def pattern_counts(codes, h: int) -> PatternDistribution:
    """Tally a code sequence of one order into a dense distribution."""
    h = _check_order(h)
    arr = np.asarray(codes, dtype=np.int64)
    if arr.ndim != 1:
        raise InvalidInput(f"codes must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InsufficientData("empty code sequence")
    size = factorial(h + 1)
    if arr.min() < 0 or arr.max() >= size:
        raise OrderMismatch(
            f"codes outside [0, {size}) cannot all be order {h}; mixed orders?"
        )
    counts = np.bincount(arr, minlength=size)
    return PatternDistribution(h=h, counts=counts, n=int(arr.size))
