"""Numba implementations of the hot kernels.

Counts are accumulated as int64, so results are exactly equal to the numpy
fallback in ``_kernels_numpy``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_FACT = np.array(
    [1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880], dtype=np.int64
)


@njit(cache=True, nogil=True)
def _codes_for_windows(wins):
    m, d = wins.shape
    codes = np.empty(m, dtype=np.int64)
    pi = np.empty(d, dtype=np.int64)
    for i in range(m):
        # insertion sort positions by descending value, ties by descending position
        for j in range(d):
            pi[j] = j
        for j in range(1, d):
            p = pi[j]
            v = wins[i, p]
            k = j - 1
            while k >= 0 and (wins[i, pi[k]] < v or (wins[i, pi[k]] == v and pi[k] < p)):
                pi[k + 1] = pi[k]
                k -= 1
            pi[k + 1] = p
        # Lehmer code of the permutation word
        code = 0
        for j in range(d - 1):
            smaller = 0
            for k in range(j + 1, d):
                if pi[k] < pi[j]:
                    smaller += 1
            code += smaller * _FACT[d - 1 - j]
        codes[i] = code
    return codes


def codes_for_windows(wins: np.ndarray) -> np.ndarray:
    """Pattern codes for each row of a (m, h+1) window matrix."""
    return _codes_for_windows(np.ascontiguousarray(wins, dtype=np.float64))


@njit(cache=True, nogil=True)
def _dominance_scan(xw, yw):
    m, d = xw.shape
    out = np.zeros((m, 6), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            # componentwise comparisons of window j against window i
            lex = True
            gex = True
            for k in range(d):
                if xw[j, k] > xw[i, k]:
                    lex = False
                if xw[j, k] < xw[i, k]:
                    gex = False
                if not lex and not gex:
                    break
            ley = True
            gey = True
            for k in range(d):
                if yw[j, k] > yw[i, k]:
                    ley = False
                if yw[j, k] < yw[i, k]:
                    gey = False
                if not ley and not gey:
                    break
            # x_j <= x_i is row i's "le" and row j's "ge"
            if lex:
                out[i, 0] += 1
                out[j, 1] += 1
            if gex:
                out[i, 1] += 1
                out[j, 0] += 1
            if ley:
                out[i, 2] += 1
                out[j, 3] += 1
            if gey:
                out[i, 3] += 1
                out[j, 2] += 1
            if lex and ley:
                out[i, 4] += 1
                out[j, 5] += 1
            if gex and gey:
                out[i, 5] += 1
                out[j, 4] += 1
    return out


def dominance_scan(xw: np.ndarray, yw: np.ndarray) -> np.ndarray:
    """Per-window dominance counts over all other windows.

    Returns an (m, 6) int64 array whose row i holds, over j != i, the counts
    of x_j <= x_i, x_j >= x_i, y_j <= y_i, y_j >= y_i, the joint <= event and
    the joint >= event (componentwise comparisons).
    """
    xw = np.ascontiguousarray(xw, dtype=np.float64)
    yw = np.ascontiguousarray(yw, dtype=np.float64)
    return _dominance_scan(xw, yw)
