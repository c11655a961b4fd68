"""Independent brute-force reference implementations used by the tests.

Everything here is deliberately written from the definitions, without
touching the library's code paths, so tests compare two independent routes
to the same quantity.
"""

from itertools import permutations

import numpy as np


def reference_pattern(window) -> tuple[int, ...]:
    """Enumerate all permutations and pick the (unique) descending ordering.

    A permutation p qualifies when w[p_0] >= ... >= w[p_h] and any tied
    neighbours satisfy p_{j-1} > p_j.
    """
    w = list(window)
    matches = []
    for p in permutations(range(len(w))):
        ok = True
        for j in range(1, len(w)):
            prev, cur = w[p[j - 1]], w[p[j]]
            if prev < cur or (prev == cur and p[j - 1] < p[j]):
                ok = False
                break
        if ok:
            matches.append(p)
    assert len(matches) == 1, f"tie rule failed to single out a pattern: {matches}"
    return matches[0]


def reference_dominance(xw, yw) -> tuple[float, float, float]:
    """Naive double loop over all ordered window pairs."""
    xw = np.asarray(xw, float)
    yw = np.asarray(yw, float)
    m = xw.shape[0]
    cx = cy = cxy = 0
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            dx = bool(np.all(xw[i] <= xw[j]))
            dy = bool(np.all(yw[i] <= yw[j]))
            cx += dx
            cy += dy
            cxy += dx and dy
    denom = m * (m - 1)
    return cx / denom, cy / denom, cxy / denom


def reference_hoeffding_f1(xw) -> np.ndarray:
    """f1(w_i) = 0.5 (Fhat + Fbarhat)(w_i) - phat, leave-one-out counting."""
    xw = np.asarray(xw, float)
    m = xw.shape[0]
    le = np.zeros(m)
    ge = np.zeros(m)
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            le[i] += bool(np.all(xw[j] <= xw[i]))
            ge[i] += bool(np.all(xw[j] >= xw[i]))
    phat = le.sum() / (m * (m - 1))
    return 0.5 * (le + ge) / (m - 1) - phat


def central_difference(fn, point, index, step=1e-6) -> float:
    """Central finite difference of a scalar function along one coordinate."""
    lo = np.array(point, dtype=float)
    hi = np.array(point, dtype=float)
    lo[index] -= step
    hi[index] += step
    return (fn(hi) - fn(lo)) / (2.0 * step)


def type7_quantile(sorted_values, q) -> float:
    """Linear-interpolation quantile (type 7), written out by hand."""
    v = np.sort(np.asarray(sorted_values, float))
    pos = q * (len(v) - 1)
    lo = int(np.floor(pos))
    hi = int(np.ceil(pos))
    frac = pos - lo
    return v[lo] * (1.0 - frac) + v[hi] * frac
