"""Spherical harmonics: dimensions, Gegenbauer recurrences, zonal kernels, and
an explicit real orthonormal basis for n in {2, 3}.

The basis is orthonormal with respect to the probability measure on S^{n-1}.
For n = 2, degree k >= 1 contributes sqrt(2) cos(k theta) and
sqrt(2) sin(k theta).  For n = 3 the basis is the real solid-harmonic family
indexed j = 1 (azimuthal order 0), j = 2m (cosine, order m), j = 2m+1 (sine,
order m); the degree-1 functions are sqrt(3) x1, sqrt(3) x2, sqrt(3) x3.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln, lpmv

__all__ = [
    "dim_harmonics",
    "gegenbauer",
    "chebyshev_t",
    "zonal",
    "zonal_matrix",
    "basis_eval",
    "HarmonicBasis",
]

_UNIT_TOL = 1e-12


def dim_harmonics(n: int, k: int) -> int:
    """Dimension of the space of degree-k spherical harmonics in n variables."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k == 0:
        return 1
    return (2 * k + n - 2) * math.comb(k + n - 2, k) // (k + n - 2)


def gegenbauer(lam: float, k: int, u) -> float | np.ndarray:
    """Gegenbauer polynomial C_k^lam(u) by the three-term recurrence.

    C_0 = 1 and C_1 = 2*lam*u; requires lam > 0 and |u| <= 1.
    """
    if lam <= 0:
        raise ValueError("gegenbauer parameter must be > 0")
    u_arr = np.asarray(u, dtype=float)
    if (np.abs(u_arr) > 1 + 1e-12).any():
        raise ValueError("argument must lie in [-1, 1]")
    u_arr = np.clip(u_arr, -1.0, 1.0)
    c0 = np.ones_like(u_arr)
    if k == 0:
        return c0 if np.ndim(u) else float(c0)
    c1 = 2 * lam * u_arr
    for j in range(2, k + 1):
        c2 = (2 * u_arr * (j + lam - 1) * c1 - (j + 2 * lam - 2) * c0) / j
        c0, c1 = c1, c2
    return c1 if np.ndim(u) else float(c1)


def chebyshev_t(k: int, u) -> np.ndarray:
    """Chebyshev T_k(u) by recurrence (the lam -> 0 limit used for n = 2)."""
    u_arr = np.clip(np.asarray(u, dtype=float), -1.0, 1.0)
    t0 = np.ones_like(u_arr)
    if k == 0:
        return t0
    t1 = u_arr.copy()
    for _ in range(2, k + 1):
        t0, t1 = t1, 2 * u_arr * t1 - t0
    return t1


def zonal_matrix(n: int, max_degree: int, u) -> np.ndarray:
    """Zonal kernel values Z_k(u) for k = 0..max_degree, shape (K+1, len(u)).

    Z_k(u) is normalized so that Z_k(1) = dim_harmonics(n, k); n = 2 rows are
    2*T_k(u), n = 3 rows are (2k+1)*P_k(u), both by stable recurrences.
    """
    if n not in (2, 3):
        raise ValueError("zonal kernels require dimension 2 or 3")
    u_arr = np.atleast_1d(np.clip(np.asarray(u, dtype=float), -1.0, 1.0))
    K = max_degree
    out = np.empty((K + 1, u_arr.size))
    out[0] = 1.0
    if K == 0:
        return out
    if n == 2:
        t0 = np.ones_like(u_arr)
        t1 = u_arr.copy()
        out[1] = 2 * t1
        for k in range(2, K + 1):
            t0, t1 = t1, 2 * u_arr * t1 - t0
            out[k] = 2 * t1
    else:
        p0 = np.ones_like(u_arr)
        p1 = u_arr.copy()
        out[1] = 3 * p1
        for k in range(2, K + 1):
            p0, p1 = p1, ((2 * k - 1) * u_arr * p1 - (k - 1) * p0) / k
            out[k] = (2 * k + 1) * p1
    return out


def _check_unit(v: np.ndarray, name: str):
    if abs(float(np.dot(v, v)) - 1.0) > 64 * _UNIT_TOL:
        raise ValueError(f"{name} must be a unit vector")


def zonal(n: int, k: int, xp, yp) -> float:
    """Zonal harmonic Z^(k) paired at two unit vectors; depends on xp.yp only."""
    xp = np.asarray(xp, dtype=float)
    yp = np.asarray(yp, dtype=float)
    if xp.shape != (n,) or yp.shape != (n,):
        raise ValueError("direction vectors must have length n")
    _check_unit(xp, "x'")
    _check_unit(yp, "y'")
    u = float(np.dot(xp, yp))
    return float(zonal_matrix(n, k, u)[k, 0])


def _assoc_norm(k: int, m: int) -> float:
    # sqrt(2*(2k+1)*(k-m)!/(k+m)!), the sigma(S^2)=1 normalization for order m > 0
    return math.exp(0.5 * (math.log(2.0) + math.log(2 * k + 1)
                           + gammaln(k - m + 1) - gammaln(k + m + 1)))


class HarmonicBasis:
    """Real orthonormal spherical harmonics up to a degree bound, n in {2, 3}."""

    def __init__(self, dimension: int, max_degree: int):
        if dimension not in (2, 3):
            raise ValueError("explicit bases exist for dimension 2 and 3 only")
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.dimension = dimension
        self.max_degree = max_degree
        self.dims = [dim_harmonics(dimension, k) for k in range(max_degree + 1)]
        self.offsets = np.concatenate([[0], np.cumsum(self.dims)])

    @property
    def total_dim(self) -> int:
        return int(self.offsets[-1])

    def eval(self, k: int, j: int, points: np.ndarray) -> np.ndarray:
        """Y_j^(k) at unit vectors ``points`` of shape (N, n)."""
        if not 0 <= k <= self.max_degree:
            raise ValueError("degree out of range")
        if not 1 <= j <= self.dims[k]:
            raise ValueError("basis index out of range")
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if self.dimension == 2:
            theta = np.arctan2(pts[:, 1], pts[:, 0])
            if k == 0:
                return np.ones(pts.shape[0])
            if j == 1:
                return math.sqrt(2.0) * np.cos(k * theta)
            return math.sqrt(2.0) * np.sin(k * theta)
        ct = np.clip(pts[:, 2], -1.0, 1.0)
        phi = np.arctan2(pts[:, 1], pts[:, 0])
        if j == 1:
            return math.sqrt(2 * k + 1) * lpmv(0, k, ct)
        m = j // 2
        amp = (-1.0) ** m * _assoc_norm(k, m) * lpmv(m, k, ct)
        return amp * (np.cos(m * phi) if j % 2 == 0 else np.sin(m * phi))

    def matrix(self, points: np.ndarray) -> np.ndarray:
        """All basis values at once, shape (total_dim, N), degree-major rows."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        out = np.empty((self.total_dim, pts.shape[0]))
        if self.dimension == 2:
            theta = np.arctan2(pts[:, 1], pts[:, 0])
            out[0] = 1.0
            for k in range(1, self.max_degree + 1):
                o = self.offsets[k]
                out[o] = math.sqrt(2.0) * np.cos(k * theta)
                out[o + 1] = math.sqrt(2.0) * np.sin(k * theta)
            return out
        ct = np.clip(pts[:, 2], -1.0, 1.0)
        phi = np.arctan2(pts[:, 1], pts[:, 0])
        cos_m = {m: np.cos(m * phi) for m in range(1, self.max_degree + 1)}
        sin_m = {m: np.sin(m * phi) for m in range(1, self.max_degree + 1)}
        for k in range(self.max_degree + 1):
            o = self.offsets[k]
            out[o] = math.sqrt(2 * k + 1) * lpmv(0, k, ct)
            for m in range(1, k + 1):
                amp = (-1.0) ** m * _assoc_norm(k, m) * lpmv(m, k, ct)
                out[o + 2 * m - 1] = amp * cos_m[m]
                out[o + 2 * m] = amp * sin_m[m]
        return out

    def index(self, k: int, j: int) -> int:
        return int(self.offsets[k]) + (j - 1)


def basis_eval(n: int, k: int, j: int, xp) -> float:
    """Single basis value Y_j^(k)(x') for a unit vector x'."""
    xp = np.asarray(xp, dtype=float)
    _check_unit(xp, "x'")
    basis = HarmonicBasis(n, k)
    return float(basis.eval(k, j, xp[None, :])[0])
