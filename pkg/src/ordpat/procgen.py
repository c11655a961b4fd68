"""Seeded generators for the bivariate processes of the simulation study.

Every generator consumes a fixed layout of inverse-CDF standard normals from
one Philox stream (see ``_rng``), so an identical :class:`ProcessSpec`
regenerates bit-identical output.  Replication substreams are derived by
hashing integer/string key tuples (``_rng.derive_seed``); distinct keys give
independent streams regardless of scheduling.

Families
--------
iid-ar1-pair      two independent stationary AR(1) paths, common coefficient rho
block-multinormal i.i.d. pairs of R^3 vectors; unit diagonal blocks, cross block
                  either constant rho (default) or rho * I
biv-ar1           coupled AR(1), matrix [[a, b], [b, -a]] (or the rotation form)
biv-ar2           lag-2 coupling with the same matrix, started from the innovations
shifted-ar1       one AR(1) path of length n+1; y is x shifted one step ahead
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import hypot, sqrt

import numpy as np
from scipy.signal import lfilter

from ordpat import _rng
from ordpat.errors import InvalidCovariance, InvalidInput, NonStationary

FAMILIES = (
    "iid-ar1-pair",
    "block-multinormal",
    "biv-ar1",
    "biv-ar1-rotation",
    "biv-ar2",
    "shifted-ar1",
)


@dataclass(frozen=True)
class ProcessSpec:
    """Declarative description of one simulated process draw."""

    family: str
    params: dict = field(default_factory=dict)
    n: int = 500
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise InvalidInput(f"n must be positive, got {self.n}")


def _check_rho(rho: float) -> float:
    if not -1.0 < rho < 1.0:
        raise NonStationary(f"need |rho| < 1, got {rho}")
    return float(rho)


def _check_ab(a: float, b: float) -> tuple[float, float]:
    if a * a + b * b >= 1.0:
        raise NonStationary(f"need a^2 + b^2 < 1, got a={a}, b={b}")
    return float(a), float(b)


def _ar1_filter(eps: np.ndarray, coef: float, init: float) -> np.ndarray:
    """x_t = coef * x_{t-1} + eps_t for t = 1..len(eps), with x_0 = init."""
    out, _ = lfilter([1.0], [1.0, -coef], eps, zi=[coef * init])
    return out


def _symmetric_coupling_basis(a: float, b: float) -> tuple[np.ndarray, float]:
    """Orthonormal eigenbasis of [[a, b], [b, -a]]; eigenvalues are +-r."""
    r = hypot(a, b)
    v1 = np.array([b, r - a])
    v2 = np.array([r + a, b])
    v = v1 if v1 @ v1 >= v2 @ v2 else v2
    norm = sqrt(v @ v)
    if norm == 0.0:  # a = b = 0
        v = np.array([1.0, 0.0])
        norm = 1.0
    u1 = v / norm
    V = np.column_stack([u1, [-u1[1], u1[0]]])
    return V, r


def _symmetric_coupled_path(xi: np.ndarray, a: float, b: float, w0: np.ndarray) -> np.ndarray:
    """W_t = [[a, b], [b, -a]] W_{t-1} + xi_t, diagonalized to two scalar AR(1)s."""
    V, r = _symmetric_coupling_basis(a, b)
    u0 = V.T @ w0
    eta = xi @ V
    u = np.column_stack(
        [_ar1_filter(eta[:, 0], r, u0[0]), _ar1_filter(eta[:, 1], -r, u0[1])]
    )
    return u @ V.T


def gen_iid_ar1_pair(rho: float, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Two independent stationary Gaussian AR(1) paths of length n.

    Normal layout: [x_init, y_init, eps_1..eps_n, eta_1..eta_n]; the initial
    states are scaled to the stationary variance 1/(1 - rho^2).
    """
    rho = _check_rho(rho)
    gen = _rng.generator(seed)
    z = _rng.standard_normals(gen, 2 + 2 * n)
    scale = 1.0 / sqrt(1.0 - rho * rho)
    x = _ar1_filter(z[2 : 2 + n], rho, scale * z[0])
    y = _ar1_filter(z[2 + n :], rho, scale * z[1])
    return x, y


def block_multinormal_covariance(rho: float, cross: str = "constant") -> np.ndarray:
    """6x6 covariance: unit diagonal blocks, cross block rho*J or rho*I."""
    if cross not in ("constant", "diagonal"):
        raise InvalidInput(f"unknown cross structure {cross!r}")
    block = np.full((3, 3), rho) if cross == "constant" else rho * np.eye(3)
    top = np.hstack([np.eye(3), block])
    bottom = np.hstack([block.T, np.eye(3)])
    return np.vstack([top, bottom])


def gen_block_multinormal(
    rho: float, n: int, seed: int, cross: str = "constant"
) -> tuple[np.ndarray, np.ndarray]:
    """n i.i.d. draws of the paired 3-vectors, as two (n, 3) arrays.

    The covariance must be positive semidefinite, checked by eigenvalue;
    the constant cross block admits |rho| <= 1/3.
    """
    cov = block_multinormal_covariance(rho, cross)
    vals = np.linalg.eigvalsh(cov)
    if vals[0] < -1e-10 * vals[-1]:
        raise InvalidCovariance(
            f"cross correlation rho={rho} makes the covariance indefinite "
            f"(smallest eigenvalue {vals[0]:.4g})"
        )
    L = np.linalg.cholesky(cov + 1e-12 * vals[-1] * np.eye(6))
    gen = _rng.generator(seed)
    z = _rng.standard_normals(gen, 6 * n).reshape(n, 6) @ L.T
    return z[:, :3], z[:, 3:]


def gen_biv_ar1(
    a: float, b: float, n: int, seed: int, rotation: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """Coupled bivariate AR(1) path of length n, stationary start.

    W_0 ~ N(0, sigma^2 I) with sigma^2 = 1/(1 - a^2 - b^2), then
    W_t = A W_{t-1} + xi_t with i.i.d. standard bivariate normal innovations.
    Normal layout: [w0_x, w0_y, xi_1x, xi_1y, ..., xi_nx, xi_ny].
    """
    a, b = _check_ab(a, b)
    gen = _rng.generator(seed)
    z = _rng.standard_normals(gen, 2 + 2 * n)
    sigma = 1.0 / sqrt(1.0 - a * a - b * b)
    w0 = sigma * z[:2]
    xi = z[2:].reshape(n, 2)
    if rotation:
        # [[a, b], [-b, a]] acts as multiplication by a - ib on x + iy
        c = a - 1j * b
        path = _ar1_filter(xi[:, 0] + 1j * xi[:, 1], c, w0[0] + 1j * w0[1])
        return np.ascontiguousarray(path.real), np.ascontiguousarray(path.imag)
    w = _symmetric_coupled_path(xi, a, b, w0)
    return np.ascontiguousarray(w[:, 0]), np.ascontiguousarray(w[:, 1])


def gen_biv_ar2(a: float, b: float, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Lag-2 coupled path: W_t = A W_{t-2} + xi_t with W_1 = xi_1, W_2 = xi_2.

    Deliberately started from the innovations (no stationary initialization
    and no burn-in); the even- and odd-indexed subsequences are independent
    lag-1 chains with the same symmetric coupling matrix.

    The internal coupling matrix is [[a, -b], [-b, -a]]: the sign of the
    off-diagonal swap is chosen so that a positive ``b`` produces positive
    order-2 co-movement of the two series (lag-1 increment cross-covariances
    +sigma^2 b); the mirrored orientation would measure the co-movement of
    (x, -y) instead.
    """
    a, b = _check_ab(a, b)
    gen = _rng.generator(seed)
    xi = _rng.standard_normals(gen, 2 * n).reshape(n, 2)
    w = np.empty_like(xi)
    zero = np.zeros(2)
    w[0::2] = _symmetric_coupled_path(xi[0::2], a, -b, zero)
    w[1::2] = _symmetric_coupled_path(xi[1::2], a, -b, zero)
    return np.ascontiguousarray(w[:, 0]), np.ascontiguousarray(w[:, 1])


def gen_shifted_ar1(rho: float, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """One stationary AR(1) path of length n+1; x is the first n points, y the last n."""
    rho = _check_rho(rho)
    gen = _rng.generator(seed)
    z = _rng.standard_normals(gen, 2 + n)
    scale = 1.0 / sqrt(1.0 - rho * rho)
    path = _ar1_filter(z[1:], rho, scale * z[0])
    return path[:n], path[1:]


def generate(spec: ProcessSpec) -> tuple[np.ndarray, np.ndarray]:
    """Dispatch a ProcessSpec to its family generator."""
    p = spec.params
    if spec.family == "iid-ar1-pair":
        return gen_iid_ar1_pair(p["rho"], spec.n, spec.seed)
    if spec.family == "block-multinormal":
        return gen_block_multinormal(
            p["rho"], spec.n, spec.seed, cross=p.get("cross", "constant")
        )
    if spec.family == "biv-ar1":
        return gen_biv_ar1(p["a"], p["b"], spec.n, spec.seed)
    if spec.family == "biv-ar1-rotation":
        return gen_biv_ar1(p["a"], p["b"], spec.n, spec.seed, rotation=True)
    if spec.family == "biv-ar2":
        return gen_biv_ar2(p["a"], p["b"], spec.n, spec.seed)
    if spec.family == "shifted-ar1":
        return gen_shifted_ar1(p["rho"], spec.n, spec.seed)
    raise InvalidInput(f"unknown family {spec.family!r}")
