"""Finite spherical-harmonic expansions: evaluation, coefficient-wise
convolution, fractional differentiation, and the pairing identity harness.

A function is stored as the ragged coefficient array {c_k^j} of its expansion
f(r x') = sum_k r^k sum_j c_k^j Y_j^(k)(x') and all operators act on those
coefficients; there is no implicit analytic continuation past the stored
degree bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .quadrature import BallRule, integrate_radial
from .spharm import HarmonicBasis, dim_harmonics

__all__ = [
    "CoefficientField",
    "HarmonicFunction",
    "convolve",
    "fractional_derivative",
    "fractional_factors",
    "convolved_poisson",
    "pairing_identity_check",
    "PairingCheck",
]


class CoefficientField:
    """Double-indexed real sequence {c_k^j : 0 <= k <= K, 1 <= j <= d_k}."""

    def __init__(self, dimension: int, rows):
        self.dimension = int(dimension)
        self.rows = [np.asarray(row, dtype=float).copy() for row in rows]
        for k, row in enumerate(self.rows):
            want = dim_harmonics(self.dimension, k)
            if row.shape != (want,):
                raise ValueError(
                    f"row {k} must have {want} entries, got {row.shape}")

    @classmethod
    def zeros(cls, dimension: int, max_degree: int) -> "CoefficientField":
        return cls(dimension, [np.zeros(dim_harmonics(dimension, k))
                               for k in range(max_degree + 1)])

    @classmethod
    def constant(cls, dimension: int, value: float,
                 max_degree: int = 0) -> "CoefficientField":
        c = cls.zeros(dimension, max_degree)
        c.rows[0][0] = value
        return c

    @classmethod
    def ones(cls, dimension: int, max_degree: int) -> "CoefficientField":
        return cls(dimension, [np.ones(dim_harmonics(dimension, k))
                               for k in range(max_degree + 1)])

    @classmethod
    def radial(cls, dimension: int, profile) -> "CoefficientField":
        """c_k^j = profile[k] for every j."""
        profile = np.asarray(profile, dtype=float)
        return cls(dimension, [np.full(dim_harmonics(dimension, k), profile[k])
                               for k in range(profile.size)])

    @property
    def max_degree(self) -> int:
        return len(self.rows) - 1

    def copy(self) -> "CoefficientField":
        return CoefficientField(self.dimension, self.rows)

    def is_radial(self) -> bool:
        return all((row == row[0]).all() for row in self.rows)

    def radial_profile(self) -> np.ndarray:
        if not self.is_radial():
            raise ValueError("coefficient field is not radial")
        return np.array([row[0] for row in self.rows])

    def flat(self) -> np.ndarray:
        return np.concatenate(self.rows) if self.rows else np.zeros(0)

    def to_json(self) -> str:
        return json.dumps({"n": self.dimension, "K": self.max_degree,
                           "rows": [row.tolist() for row in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "CoefficientField":
        doc = json.loads(text)
        rows = doc["rows"]
        if len(rows) != doc["K"] + 1:
            raise ValueError("row count does not match declared degree bound")
        return cls(doc["n"], rows)


class HarmonicFunction:
    """A CoefficientField read as the expansion coefficients b_k^j of f."""

    def __init__(self, coefficients: CoefficientField):
        self.coefficients = coefficients
        self._basis = HarmonicBasis(coefficients.dimension,
                                    coefficients.max_degree)

    @classmethod
    def from_rows(cls, dimension: int, rows) -> "HarmonicFunction":
        return cls(CoefficientField(dimension, rows))

    @classmethod
    def constant(cls, dimension: int, value: float) -> "HarmonicFunction":
        return cls(CoefficientField.constant(dimension, value))

    @property
    def dimension(self) -> int:
        return self.coefficients.dimension

    @property
    def max_degree(self) -> int:
        return self.coefficients.max_degree

    @property
    def rows(self):
        return self.coefficients.rows

    def degree_profiles(self, points) -> np.ndarray:
        """g_k(x') = sum_j b_k^j Y_j^(k)(x') for all k; shape (K+1, N)."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        mat = self._basis.matrix(pts)
        out = np.empty((self.max_degree + 1, pts.shape[0]))
        for k in range(self.max_degree + 1):
            o = self._basis.offsets[k]
            out[k] = self.rows[k] @ mat[o:o + self._basis.dims[k]]
        return out

    def sphere_values_many(self, radii, points) -> np.ndarray:
        """Values f(r_i x'_j) as a (len(radii), N) array."""
        rs = np.atleast_1d(np.asarray(radii, dtype=float))
        profiles = self.degree_profiles(points)
        powers = np.power(rs[:, None], np.arange(self.max_degree + 1)[None, :])
        return powers @ profiles

    def eval(self, x) -> float:
        """Value at a ball point (BallPoint or coordinate vector)."""
        from .kernels import BallPoint

        if not isinstance(x, BallPoint):
            x = BallPoint.from_vector(x)
        return float(self.sphere_values_many([x.radius],
                                             x.direction[None, :])[0, 0])

    __call__ = eval

    def __add__(self, other: "HarmonicFunction") -> "HarmonicFunction":
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        K = max(self.max_degree, other.max_degree)
        rows = []
        for k in range(K + 1):
            d = dim_harmonics(self.dimension, k)
            row = np.zeros(d)
            if k <= self.max_degree:
                row += self.rows[k]
            if k <= other.max_degree:
                row += other.rows[k]
            rows.append(row)
        return HarmonicFunction.from_rows(self.dimension, rows)

    def __mul__(self, scalar: float) -> "HarmonicFunction":
        return HarmonicFunction.from_rows(
            self.dimension, [row * float(scalar) for row in self.rows])

    __rmul__ = __mul__

    def __sub__(self, other: "HarmonicFunction") -> "HarmonicFunction":
        return self + (-1.0) * other


def convolve(c: CoefficientField, f: HarmonicFunction) -> HarmonicFunction:
    """Coefficient-wise (Hadamard) product c_k^j b_k^j(f), truncated at min degree."""
    if c.dimension != f.dimension:
        raise ValueError("dimension mismatch between multiplier and function")
    K = min(c.max_degree, f.max_degree)
    rows = [c.rows[k] * f.rows[k] for k in range(K + 1)]
    return HarmonicFunction.from_rows(f.dimension, rows)


def fractional_factors(n: int, t: float, degrees) -> np.ndarray:
    """Diagonal factors Gamma(k+n/2+t)/(Gamma(k+n/2) Gamma(t)), via log-gamma."""
    if t <= 0:
        raise ValueError("derivative order must be > 0")
    k = np.asarray(degrees, dtype=float)
    return np.exp(gammaln(k + n / 2 + t) - gammaln(k + n / 2) - gammaln(t))


def fractional_derivative(f: HarmonicFunction, t: float) -> HarmonicFunction:
    """Scale the degree-k coefficients by the order-t fractional factors."""
    factors = fractional_factors(f.dimension, t, np.arange(f.max_degree + 1))
    rows = [f.rows[k] * factors[k] for k in range(f.max_degree + 1)]
    return HarmonicFunction.from_rows(f.dimension, rows)


def convolved_poisson(g: HarmonicFunction, yp) -> HarmonicFunction:
    """The harmonic function x -> sum_k r^k sum_j c_k^j Y_j^(k)(y') Y_j^(k)(x').

    This is g convolved with the Poisson kernel section at y'; it satisfies
    the exchange symmetry in (x', y') and commutes with fractional derivatives
    coefficient-wise.
    """
    yp = np.asarray(yp, dtype=float)
    basis = HarmonicBasis(g.dimension, g.max_degree)
    ymat = basis.matrix(yp[None, :])[:, 0]
    rows = []
    for k in range(g.max_degree + 1):
        o = basis.offsets[k]
        rows.append(g.rows[k] * ymat[o:o + basis.dims[k]])
    return HarmonicFunction.from_rows(g.dimension, rows)


@dataclass(frozen=True)
class PairingCheck:
    """Three evaluations of the same pairing and their maximum deviation."""

    series: float
    sphere_integral: float
    weighted_double_integral: float
    max_deviation: float


def pairing_identity_check(f: HarmonicFunction, g: HarmonicFunction, m: float,
                           r: float, rho: float, yp, rule: BallRule) -> PairingCheck:
    """Check the sphere pairing of (g * P_{y'}) against f three ways.

    Computes (i) the coefficient series sum_k r^k rho^k sum_j b_k^j c_k^j
    Y_j^(k)(y'), (ii) the sphere integral of (g*P_{y'})(r x') f(rho x'), and
    (iii) the weighted radial-sphere double integral with the order-(m+1)
    fractional derivative and weight (1-R^2)^m, which must all agree for any
    m > -1.
    """
    if m <= -1:
        raise ValueError("weight order must be > -1")
    yp = np.asarray(yp, dtype=float)
    n = f.dimension
    if g.dimension != n:
        raise ValueError("dimension mismatch")

    K = min(f.max_degree, g.max_degree)
    basis = HarmonicBasis(n, K)
    ymat = basis.matrix(yp[None, :])[:, 0]
    series = 0.0
    for k in range(K + 1):
        o = basis.offsets[k]
        yk = ymat[o:o + basis.dims[k]]
        series += (r * rho) ** k * float(np.dot(f.rows[k], g.rows[k] * yk))

    gp = convolved_poisson(g, yp)
    pts = rule.sphere.points
    w = rule.sphere.weights
    lhs = float(np.dot(w, gp.sphere_values_many([r], pts)[0]
                       * f.sphere_values_many([rho], pts)[0]))

    lam_gp = fractional_derivative(gp, m + 1.0)

    def integrand(R):
        R = np.atleast_1d(R)
        gv = lam_gp.sphere_values_many(r * R, pts)
        fv = f.sphere_values_many(rho * R, pts)
        inner = (gv * fv) @ w
        return 2.0 * inner * (1.0 + R) ** m * R ** (n - 1)

    rhs = integrate_radial(integrand, m, rule.radial)

    dev = max(abs(series - lhs), abs(series - rhs), abs(lhs - rhs))
    return PairingCheck(series, lhs, rhs, dev)
