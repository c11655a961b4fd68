"""Ordinal pattern dependence (OPD) estimation.

The measure for a window pair is

    (Pr(matching patterns) - sum_pi q_x[pi] q_y[pi]) / (1 - sum_pi q_x[pi] q_y[pi]),

the excess probability of coinciding patterns over the independence baseline,
normalized to 1 at perfect co-movement.  This module provides the plug-in
estimator on paired series (sliding windows, optional time shift of the
second series), the signed two-sided variant, and -- for i.i.d. paired
vector samples -- the delta-method asymptotic variance and normal confidence
intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, sqrt

import numpy as np
from scipy.special import ndtri

from ordpat.errors import (
    DegenerateDenominator,
    InputMismatch,
    InsufficientData,
    InvalidInput,
)
from ordpat.estimates import DependenceEstimate
from ordpat.patterns import codes_for_windows, pattern_counts, pattern_sequence

#: Guard for the normalizer 1 - sum(q_x * q_y); below this the measure is undefined.
EPS_DEN = 1e-12


def _check_prob_vector(q, name: str) -> np.ndarray:
    arr = np.asarray(q, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidInput(f"{name} must be a nonempty vector")
    if not np.all(np.isfinite(arr)) or arr.min() < 0 or arr.max() > 1:
        raise InvalidInput(f"{name} is not a probability vector")
    return arr


def opd_plugin(q_match: float, q_x, q_y) -> float:
    """Evaluate the measure from a match probability and two pattern distributions.

    Raises DegenerateDenominator when sum(q_x * q_y) is within EPS_DEN of 1
    (both distributions concentrated on one common pattern).
    """
    qx = _check_prob_vector(q_x, "q_x")
    qy = _check_prob_vector(q_y, "q_y")
    if qx.size != qy.size:
        raise InputMismatch("q_x and q_y must have equal length")
    if not 0.0 <= q_match <= 1.0:
        raise InvalidInput(f"q_match must be in [0, 1], got {q_match}")
    s = float(qx @ qy)
    den = 1.0 - s
    if den < EPS_DEN:
        raise DegenerateDenominator(
            f"independence baseline sum(q_x*q_y) = {s:.17g} leaves no mass to "
            "normalize; both series are (almost) always in one common pattern"
        )
    return (q_match - s) / den


def _plugin_from_counts(match_count: int, counts_x, counts_y, divisor: int) -> float:
    """Plug-in value via exact integer arithmetic.

    (C/d - S/d^2) / (1 - S/d^2) = (C d - S) / (d^2 - S) with integer match
    count C, integer product sum S and divisor d; evaluating the ratio of
    integers makes the estimate exactly invariant under pattern relabelings
    (monotone transforms, simultaneous coordinate permutations).
    """
    S = int(
        np.dot(np.asarray(counts_x, dtype=np.int64), np.asarray(counts_y, dtype=np.int64))
    )
    d = int(divisor)
    den = d * d - S
    if den < EPS_DEN * d * d:
        s = S / (d * d)
        raise DegenerateDenominator(
            f"independence baseline sum(q_x*q_y) = {s:.17g} leaves no mass to "
            "normalize; both series are (almost) always in one common pattern"
        )
    return (int(match_count) * d - S) / den


def opd_from_series(
    x,
    y,
    h: int,
    shift: int = 0,
    normalization: str = "windows",
) -> DependenceEstimate:
    """Plug-in OPD of two equally long series using sliding windows.

    The pattern sequence of ``x`` starts at offset 0 and the one of ``y`` at
    offset ``shift``; both are truncated to the common length, so window k of
    ``x`` is compared with window ``k + shift`` of ``y``.

    ``normalization`` selects the divisor of the indicator counts:
    ``"windows"`` (default) divides by the number of paired windows, giving
    proper relative frequencies; ``"length"`` divides by the series length
    ``n``, the convention of the reference simulation study, which shrinks
    the estimate toward zero by O(h/n).

    No variance is attached: the available normal limit theory covers
    independent vector samples (see :func:`opd_iid_estimate`), not
    overlapping windows.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise InputMismatch(f"series lengths differ: {x.shape} vs {y.shape}")
    if normalization not in ("windows", "length"):
        raise InvalidInput(f"unknown normalization {normalization!r}")
    codes_x = pattern_sequence(x, h, 0)
    codes_y = pattern_sequence(y, h, shift)
    L = codes_y.size
    codes_x = codes_x[:L]
    if L < 2:
        raise InsufficientData(f"only {L} usable window pairs; need at least 2")
    matches = int(np.count_nonzero(codes_x == codes_y))
    counts_x = pattern_counts(codes_x, h).counts
    counts_y = pattern_counts(codes_y, h).counts
    divisor = x.size if normalization == "length" else L
    value = _plugin_from_counts(matches, counts_x, counts_y, divisor)
    return DependenceEstimate(value=value, method="opd", h=h, n=L, shift=shift)


def signed_opd(x, y, h: int) -> float:
    """Two-sided variant: positive parts of OPD(x, y) minus OPD(x, -y).

    Plain OPD registers only positive (co-monotone) dependence; mirroring the
    second series captures anti-monotone co-movement, and the difference of
    positive parts reports whichever side is present.
    """
    plus = opd_from_series(x, y, h).value
    minus = opd_from_series(x, np.negative(np.asarray(y, dtype=np.float64)), h).value
    return max(plus, 0.0) - max(minus, 0.0)


@dataclass(frozen=True)
class JointPatternTable:
    """Contingency table of pattern pairs (code of x-vector, code of y-vector)."""

    h: int
    joint_counts: np.ndarray
    n: int

    @property
    def joint_frequencies(self) -> np.ndarray:
        return self.joint_counts / self.n

    @property
    def x_frequencies(self) -> np.ndarray:
        return self.joint_counts.sum(axis=1) / self.n

    @property
    def y_frequencies(self) -> np.ndarray:
        return self.joint_counts.sum(axis=0) / self.n

    @property
    def match_frequency(self) -> float:
        return float(np.trace(self.joint_counts)) / self.n


def _as_vector_samples(vectors, h: int | None, name: str) -> np.ndarray:
    arr = np.asarray(vectors, dtype=np.float64)
    if arr.ndim != 2:
        raise InvalidInput(f"{name} must be a 2-d sample array, got shape {arr.shape}")
    if h is not None and arr.shape[1] != h + 1:
        raise InputMismatch(
            f"{name} rows have length {arr.shape[1]}, expected h+1 = {h + 1}"
        )
    return arr


def joint_pattern_table(x_vectors, y_vectors, h: int) -> JointPatternTable:
    """Count joint pattern occurrences of paired (h+1)-vector samples."""
    xv = _as_vector_samples(x_vectors, h, "x_vectors")
    yv = _as_vector_samples(y_vectors, h, "y_vectors")
    if xv.shape[0] != yv.shape[0]:
        raise InputMismatch("x_vectors and y_vectors must pair up row by row")
    if xv.shape[0] < 1:
        raise InsufficientData("no vector pairs given")
    K = factorial(h + 1)
    cx = codes_for_windows(xv)
    cy = codes_for_windows(yv)
    flat = np.bincount(cx * K + cy, minlength=K * K)
    return JointPatternTable(h=h, joint_counts=flat.reshape(K, K), n=int(xv.shape[0]))


def opd_iid_covariance(table: JointPatternTable) -> np.ndarray:
    """Plug-in covariance of the joint indicator vector for i.i.d. samples.

    Covariance of (1{match}, (1{pattern x = pi})_pi, (1{pattern y = pi})_pi),
    a symmetric (2K+1) x (2K+1) matrix with K = (h+1)!.  Blocks follow the
    multinomial structure; the cross blocks use the joint pattern-pair and
    diagonal (matching-pattern) probabilities.
    """
    K = factorial(table.h + 1)
    J = table.joint_frequencies
    qx = table.x_frequencies
    qy = table.y_frequencies
    diag = np.diag(J)
    q = float(diag.sum())
    S = np.empty((2 * K + 1, 2 * K + 1), dtype=np.float64)
    S[0, 0] = q * (1.0 - q)
    S[0, 1 : K + 1] = diag - q * qx
    S[0, K + 1 :] = diag - q * qy
    S[1 : K + 1, 0] = S[0, 1 : K + 1]
    S[K + 1 :, 0] = S[0, K + 1 :]
    S[1 : K + 1, 1 : K + 1] = np.diag(qx) - np.outer(qx, qx)
    S[K + 1 :, K + 1 :] = np.diag(qy) - np.outer(qy, qy)
    S[1 : K + 1, K + 1 :] = J - np.outer(qx, qy)
    S[K + 1 :, 1 : K + 1] = S[1 : K + 1, K + 1 :].T
    return S


def grad_f(u: float, v, w) -> np.ndarray:
    """Gradient of f(u, v, w) = (u - v.w) / (1 - v.w) stacked as (u, v, w).

    Closed form: df/du = 1/(1 - v.w); df/dv_k = w_k (u - 1)/(1 - v.w)^2 and
    symmetrically for w.
    """
    v = _check_prob_vector(v, "v")
    w = _check_prob_vector(w, "w")
    if v.size != w.size:
        raise InputMismatch("v and w must have equal length")
    s = float(v @ w)
    den = 1.0 - s
    if den < EPS_DEN:
        raise DegenerateDenominator(f"1 - v.w = {den:.17g} below guard {EPS_DEN}")
    g = np.empty(2 * v.size + 1, dtype=np.float64)
    g[0] = 1.0 / den
    g[1 : v.size + 1] = w * (u - 1.0) / den**2
    g[v.size + 1 :] = v * (u - 1.0) / den**2
    return g


def opd_iid_estimate(
    x_vectors, y_vectors, h: int, confidence: float = 0.95
) -> DependenceEstimate:
    """OPD of i.i.d. paired vector samples with delta-method variance and CI.

    The estimate is asymptotically normal with variance g' S g where S is the
    indicator covariance (:func:`opd_iid_covariance`) and g the gradient of
    the plug-in functional; a numerically negative variance is clamped to 0
    and flagged.
    """
    if not 0.0 < confidence < 1.0:
        raise InvalidInput(f"confidence must be in (0, 1), got {confidence}")
    table = joint_pattern_table(x_vectors, y_vectors, h)
    qx = table.x_frequencies
    qy = table.y_frequencies
    q = table.match_frequency
    value = _plugin_from_counts(
        int(np.trace(table.joint_counts)),
        table.joint_counts.sum(axis=1),
        table.joint_counts.sum(axis=0),
        table.n,
    )
    g = grad_f(q, qx, qy)
    sigma2 = float(g @ opd_iid_covariance(table) @ g)
    clamped = sigma2 < 0.0
    if clamped:
        sigma2 = 0.0
    z = float(ndtri(0.5 + confidence / 2.0))
    half = z * sqrt(sigma2 / table.n)
    return DependenceEstimate(
        value=value,
        method="opd-iid",
        h=h,
        n=table.n,
        variance=sigma2,
        ci_low=value - half,
        ci_high=value + half,
        variance_clamped=clamped,
    )
