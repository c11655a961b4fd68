"""Multivariate Pearson correlation of windowed vectors.

The coefficient is tr(Sigma_xy) / tr((Sigma_x Sigma_y)^(1/2)) with sample
covariance matrices of the overlapping (h+1)-windows.  Only the lag-0
cross-covariances enter the numerator (the trace ignores the off-diagonal
cross terms), which is exactly why this measure is blind to dynamical
cross-dependence -- it is implemented here as the comparison baseline.

The denominator is evaluated through the similarity transform
tr((Sigma_x Sigma_y)^(1/2)) = tr((R Sigma_y R)^(1/2)) with R = Sigma_x^(1/2),
so only principal square roots of symmetric PSD matrices are ever taken.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ordpat.errors import InputMismatch, InsufficientData, SingularCovariance
from ordpat.estimates import DependenceEstimate
from ordpat.patterns import series_windows

#: Relative eigenvalue floor below which a covariance counts as singular.
EPS_PD = 1e-10


@dataclass(frozen=True)
class WindowCovariances:
    """Sample covariances of the window coordinates (denominator m - 1)."""

    sigma_x: np.ndarray
    sigma_y: np.ndarray
    sigma_xy: np.ndarray
    m: int


def window_covariances(x, y, h: int, center: bool = True) -> WindowCovariances:
    """Covariance matrices of the overlapping (h+1)-windows of two series.

    With ``center=False`` the raw second-moment matrices (divisor m) are
    returned instead; appropriate when the process mean is known to be zero,
    where it avoids the O(1/n) centering bias that long-memory paths
    amplify.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise InputMismatch(f"series lengths differ: {x.shape} vs {y.shape}")
    xw = series_windows(x, h)
    yw = series_windows(y, h)
    m = xw.shape[0]
    if m < 2:
        raise InsufficientData("need at least 2 windows for a covariance")
    if center:
        xc = xw - xw.mean(axis=0)
        yc = yw - yw.mean(axis=0)
        denom = m - 1
    else:
        xc, yc = xw, yw
        denom = m
    return WindowCovariances(
        sigma_x=(xc.T @ xc) / denom,
        sigma_y=(yc.T @ yc) / denom,
        sigma_xy=(xc.T @ yc) / denom,
        m=m,
    )


def principal_sqrt_psd(mat: np.ndarray) -> np.ndarray:
    """Principal square root of a symmetric PSD matrix via eigendecomposition.

    Eigenvalues within round-off below zero are clamped to zero, so the root
    is the unique PSD matrix R with R @ R = mat.
    """
    sym = 0.5 * (mat + mat.T)
    vals, vecs = np.linalg.eigh(sym)
    return (vecs * np.sqrt(np.maximum(vals, 0.0))) @ vecs.T


def _require_pd(mat: np.ndarray, name: str) -> None:
    vals = np.linalg.eigvalsh(0.5 * (mat + mat.T))
    top = float(vals[-1])
    if top <= 0.0 or float(vals[0]) <= EPS_PD * top:
        raise SingularCovariance(
            f"{name} is numerically singular (eigenvalues {vals[0]:.3e} .. {top:.3e})"
        )


def pearson_from_covariances(cov: WindowCovariances) -> float:
    """Trace-ratio coefficient from precomputed window covariances."""
    _require_pd(cov.sigma_x, "sigma_x")
    _require_pd(cov.sigma_y, "sigma_y")
    root_x = principal_sqrt_psd(cov.sigma_x)
    inner = root_x @ cov.sigma_y @ root_x
    vals = np.linalg.eigvalsh(0.5 * (inner + inner.T))
    denom = float(np.sqrt(np.maximum(vals, 0.0)).sum())
    return float(np.trace(cov.sigma_xy)) / denom


def pearson_mv(x, y, h: int, center: bool = True) -> DependenceEstimate:
    """Multivariate Pearson coefficient of two series at window order h."""
    cov = window_covariances(x, y, h, center=center)
    value = pearson_from_covariances(cov)
    return DependenceEstimate(value=value, method="pearson", h=h, n=cov.m)
