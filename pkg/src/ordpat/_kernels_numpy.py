"""Pure-numpy fallbacks for the hot kernels (see ``_kernels_numba``).

The dominance scan broadcasts in row blocks to bound peak memory; the block
size caps the boolean comparison tensor at roughly 2^24 elements.
"""

from __future__ import annotations

from math import factorial

import numpy as np

BACKEND_NAME = "numpy"


def codes_for_windows(wins: np.ndarray) -> np.ndarray:
    """Pattern codes for each row of a (m, h+1) window matrix."""
    wins = np.asarray(wins, dtype=np.float64)
    m, d = wins.shape
    # Stable argsort of the negated, column-reversed windows sorts by
    # descending value with ties broken by descending original position.
    rev = np.argsort(-wins[:, ::-1], axis=1, kind="stable")
    pi = (d - 1) - rev
    codes = np.zeros(m, dtype=np.int64)
    for j in range(d - 1):
        smaller = (pi[:, j + 1 :] < pi[:, j : j + 1]).sum(axis=1)
        codes += smaller * factorial(d - 1 - j)
    return codes


def dominance_scan(xw: np.ndarray, yw: np.ndarray) -> np.ndarray:
    """Per-window dominance counts; same contract as the numba kernel."""
    xw = np.asarray(xw, dtype=np.float64)
    yw = np.asarray(yw, dtype=np.float64)
    m, d = xw.shape
    out = np.empty((m, 6), dtype=np.int64)
    block = max(1, (1 << 24) // max(m * d, 1))
    for start in range(0, m, block):
        stop = min(m, start + block)
        xi = xw[start:stop, None, :]
        yi = yw[start:stop, None, :]
        lex = (xw[None, :, :] <= xi).all(axis=2)
        gex = (xw[None, :, :] >= xi).all(axis=2)
        ley = (yw[None, :, :] <= yi).all(axis=2)
        gey = (yw[None, :, :] >= yi).all(axis=2)
        # every window satisfies all six events against itself; drop that
        out[start:stop, 0] = lex.sum(axis=1) - 1
        out[start:stop, 1] = gex.sum(axis=1) - 1
        out[start:stop, 2] = ley.sum(axis=1) - 1
        out[start:stop, 3] = gey.sum(axis=1) - 1
        out[start:stop, 4] = (lex & ley).sum(axis=1) - 1
        out[start:stop, 5] = (gex & gey).sum(axis=1) - 1
    return out
