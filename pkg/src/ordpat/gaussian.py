"""Closed-form population values and Monte Carlo oracles for Gaussian models.

Zero-mean Gaussian window models admit closed forms at order 1 (arcsine
laws), and every pattern probability reduces to an orthant probability of a
linear transform of the window vector.  No closed form exists for orthants
beyond dimension 3, so a seeded Monte Carlo orthant estimator serves as the
oracle; its binomial standard error is always reported alongside the value.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import asin, pi, sqrt

import numpy as np

from ordpat import _rng
from ordpat.errors import (
    InputMismatch,
    InvalidCorrelation,
    InvalidCovariance,
    InvalidInput,
    NonStationary,
)
from ordpat.estimates import McEstimate
from ordpat.kendall import grad_psi, psi
from ordpat.opd import opd_iid_estimate

_PSD_TOL = 1e-10
_BLOCK = 1 << 16


@dataclass(frozen=True)
class GaussianModel:
    """Zero-mean multivariate normal law given by its covariance matrix."""

    covariance: np.ndarray

    def __post_init__(self):
        cov = np.asarray(self.covariance, dtype=np.float64)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
            raise InvalidCovariance(f"covariance must be square, got {cov.shape}")
        if not np.all(np.isfinite(cov)):
            raise InvalidCovariance("covariance contains non-finite values")
        if not np.allclose(cov, cov.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(cov).max())):
            raise InvalidCovariance("covariance is not symmetric")
        vals = np.linalg.eigvalsh(cov)
        lam_max = float(vals[-1])
        if lam_max <= 0.0 or float(vals[0]) < -_PSD_TOL * lam_max:
            raise InvalidCovariance(
                f"covariance is not positive semidefinite (eigenvalues "
                f"{vals[0]:.3e} .. {lam_max:.3e})"
            )
        object.__setattr__(self, "covariance", cov)

    @property
    def dimension(self) -> int:
        return self.covariance.shape[0]


def _cholesky_factor(model: GaussianModel) -> np.ndarray:
    cov = model.covariance
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        lam_max = float(np.linalg.eigvalsh(cov)[-1])
        jitter = 1e-12 * lam_max * np.eye(model.dimension)
        try:
            return np.linalg.cholesky(cov + jitter)
        except np.linalg.LinAlgError as exc:
            raise InvalidCovariance("covariance admits no Cholesky factor") from exc


def opd1_gaussian(increment_corr: float) -> float:
    """Order-1 measure for Gaussian windows: (2/pi) * arcsin of the increment correlation."""
    if not -1.0 <= increment_corr <= 1.0:
        raise InvalidCorrelation(f"correlation {increment_corr} outside [-1, 1]")
    return (2.0 / pi) * asin(increment_corr)


def bivariate_orthant(rho: float) -> float:
    """P(Z1 <= 0, Z2 <= 0) for standard bivariate normal: 1/4 + arcsin(rho)/(2 pi)."""
    if not -1.0 <= rho <= 1.0:
        raise InvalidCorrelation(f"correlation {rho} outside [-1, 1]")
    return 0.25 + asin(rho) / (2.0 * pi)


def sample(model: GaussianModel, n: int, seed: int) -> np.ndarray:
    """n draws from the model as an (n, d) array (Cholesky transform)."""
    L = _cholesky_factor(model)
    gen = _rng.generator(_rng.derive_seed("gaussian-sample", seed))
    z = _rng.standard_normals(gen, n * model.dimension).reshape(n, model.dimension)
    return z @ L.T


def mc_orthant(
    model: GaussianModel, n_samples: int = 1_000_000, seed: int = 0, threads: int = 1
) -> McEstimate:
    """Monte Carlo estimate of P(all coordinates <= 0) with binomial std error.

    Samples are drawn in blocks of 2^16 whose substreams derive from the
    block index, so the result is identical for any thread count.
    """
    if model.dimension > 16:
        raise InvalidInput(f"orthant dimension {model.dimension} exceeds 16")
    if n_samples < 1_000:
        raise InvalidInput("need at least 1000 Monte Carlo samples")
    L = _cholesky_factor(model)
    d = model.dimension
    sizes = [_BLOCK] * (n_samples // _BLOCK)
    if n_samples % _BLOCK:
        sizes.append(n_samples % _BLOCK)

    def block_count(args) -> int:
        index, size = args
        gen = _rng.generator(_rng.derive_seed("orthant-block", seed, index))
        z = _rng.standard_normals(gen, size * d).reshape(size, d)
        return int(((z @ L.T) <= 0.0).all(axis=1).sum())

    jobs = list(enumerate(sizes))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(block_count, jobs))
    else:
        hits = sum(map(block_count, jobs))
    p = hits / n_samples
    return McEstimate(value=p, std_error=sqrt(p * (1.0 - p) / n_samples))


def kendall_gaussian(
    model: GaussianModel, n_samples: int = 1_000_000, seed: int = 0, threads: int = 1
) -> McEstimate:
    """Kendall's tau of a stacked Gaussian window pair via orthant probabilities.

    For a zero-mean Gaussian pair (X, Y) of windows (model dimension 2(h+1)),
    tau equals psi(p_x, p_y, p_xy) where p_x, p_y are the orthant
    probabilities of the two blocks and p_xy the joint one.  Each is
    estimated with :func:`mc_orthant` on derived substreams; the standard
    error propagates through the gradient of psi.
    """
    d = model.dimension
    if d % 2 != 0:
        raise InputMismatch(f"model dimension {d} is not 2*(h+1)")
    half = d // 2
    cov = model.covariance
    px = mc_orthant(GaussianModel(cov[:half, :half]), n_samples, _rng.derive_seed("kg-x", seed), threads)
    py = mc_orthant(GaussianModel(cov[half:, half:]), n_samples, _rng.derive_seed("kg-y", seed), threads)
    pxy = mc_orthant(model, n_samples, _rng.derive_seed("kg-xy", seed), threads)
    value = psi(px.value, py.value, pxy.value)
    g = grad_psi(px.value, py.value, pxy.value)
    se = sqrt(
        (g[0] * px.std_error) ** 2
        + (g[1] * py.std_error) ** 2
        + (g[2] * pxy.std_error) ** 2
    )
    return McEstimate(value=value, std_error=se)


def _check_ar1_params(a: float, b: float) -> None:
    if a * a + b * b >= 1.0:
        raise NonStationary(f"need a^2 + b^2 < 1, got {a * a + b * b:.6g}")


def ar1_opd1(a: float, b: float, rotation: bool = False) -> float:
    """Order-1 measure of the coupled bivariate AR(1) process, in closed form.

    For the symmetric coupling matrix [[a, b], [b, -a]] the increment
    correlation is -b / sqrt(1 - a^2); the rotation coupling
    [[a, b], [-b, a]] decorrelates the lag-0 increments, giving 0.
    """
    _check_ar1_params(a, b)
    if rotation:
        return 0.0
    return opd1_gaussian(-b / sqrt(1.0 - a * a))


def shifted_ar1_opd1(rho: float) -> float:
    """Order-1 measure between an AR(1) path and itself shifted by one step."""
    if not -1.0 < rho < 1.0:
        raise NonStationary(f"need |rho| < 1, got {rho}")
    return opd1_gaussian((rho - 1.0) / 2.0)


def ar1_window_model(a: float, b: float, h: int, rotation: bool = False) -> GaussianModel:
    """Covariance model of (X_1..X_{1+h}, Y_1..Y_{1+h}) for the bivariate AR(1).

    The stationary lag covariance is Cov(W_{t+s}, W_t) = sigma^2 A^s with
    sigma^2 = 1 / (1 - a^2 - b^2).
    """
    _check_ar1_params(a, b)
    if h < 0:
        raise InvalidInput("h must be >= 0")
    A = np.array([[a, b], [-b, a]]) if rotation else np.array([[a, b], [b, -a]])
    sigma2 = 1.0 / (1.0 - a * a - b * b)
    lag = [sigma2 * np.linalg.matrix_power(A, s) for s in range(h + 1)]
    d = 2 * (h + 1)
    cov = np.empty((d, d))
    for u in range(2):
        for v in range(2):
            for i in range(h + 1):
                for j in range(h + 1):
                    block = lag[i - j][u, v] if i >= j else lag[j - i][v, u]
                    cov[u * (h + 1) + i, v * (h + 1) + j] = block
    return GaussianModel(covariance=cov)


def pattern_difference_matrix(pattern) -> np.ndarray:
    """Map from a window to the successive differences along a pattern word.

    Row j of the (h, h+1) matrix computes x[p_{j+1}] - x[p_j]; the window has
    pattern p exactly when all rows evaluate <= 0.
    """
    p = tuple(int(v) for v in pattern)
    h = len(p) - 1
    if sorted(p) != list(range(h + 1)):
        raise InvalidInput(f"{pattern!r} is not a permutation word")
    D = np.zeros((h, h + 1))
    for j in range(h):
        D[j, p[j + 1]] = 1.0
        D[j, p[j]] = -1.0
    return D


def opd_gaussian_decomposition(
    model: GaussianModel,
    h: int,
    n_samples: int = 1_000_000,
    seed: int = 0,
    threads: int = 1,
) -> McEstimate:
    """Pattern-wise orthant decomposition of the measure for a Gaussian window pair.

    Each pattern contributes a Kendall-type term: tau of the 2h pattern
    differences times the geometric mean of the marginal pattern-probability
    variances, summed over all patterns and divided by the independence
    normalizer.  All pattern and joint probabilities are estimated with
    :func:`mc_orthant` on the transformed covariances D Sigma D'; the
    standard error propagates linearly through the assembly.
    """
    if h < 1 or h > 3:
        raise InvalidInput(f"decomposition supports 1 <= h <= 3, got {h}")
    d = 2 * (h + 1)
    if model.dimension != d:
        raise InputMismatch(f"model dimension {model.dimension}, expected {d}")
    cov = model.covariance
    cov_x = cov[: h + 1, : h + 1]
    cov_y = cov[h + 1 :, h + 1 :]
    terms = []
    for code, pat in enumerate(permutations(range(h + 1))):
        D = pattern_difference_matrix(pat)
        DJ = np.zeros((2 * h, d))
        DJ[:h, : h + 1] = D
        DJ[h:, h + 1 :] = D
        px = mc_orthant(
            GaussianModel(D @ cov_x @ D.T), n_samples, _rng.derive_seed("dec-x", seed, code), threads
        )
        py = mc_orthant(
            GaussianModel(D @ cov_y @ D.T), n_samples, _rng.derive_seed("dec-y", seed, code), threads
        )
        pj = mc_orthant(
            GaussianModel(DJ @ cov @ DJ.T), n_samples, _rng.derive_seed("dec-j", seed, code), threads
        )
        tau = psi(px.value, py.value, pj.value)
        terms.append((px, py, pj, tau))
    numer = sum(
        t * sqrt(px.value * (1 - px.value) * py.value * (1 - py.value))
        for px, py, _, t in terms
    )
    denom = 1.0 - sum(px.value * py.value for px, py, _, _ in terms)
    value = numer / denom
    var = 0.0
    for px, py, pj, _ in terms:
        var += (pj.std_error / denom) ** 2
        var += (py.value * (value - 1.0) / denom * px.std_error) ** 2
        var += (px.value * (value - 1.0) / denom * py.std_error) ** 2
    return McEstimate(value=value, std_error=sqrt(var))


def opd_gaussian_mc(
    model: GaussianModel, h: int, n_samples: int = 200_000, seed: int = 0
) -> McEstimate:
    """Direct Monte Carlo route: sample window pairs, count pattern matches.

    Complements :func:`opd_gaussian_decomposition` as an independent estimate
    of the same population quantity; the standard error is the delta-method
    one of the i.i.d. plug-in estimator.
    """
    d = 2 * (h + 1)
    if model.dimension != d:
        raise InputMismatch(f"model dimension {model.dimension}, expected {d}")
    draws = sample(model, n_samples, seed)
    est = opd_iid_estimate(draws[:, : h + 1], draws[:, h + 1 :], h)
    return McEstimate(value=est.value, std_error=sqrt(est.variance / n_samples))
