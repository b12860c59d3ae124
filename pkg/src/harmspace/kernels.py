"""Poisson and weighted reproducing kernels on the ball and the upper
half-space, plus the kernel sections used as extremal test functions.

Ball conventions (probability measure on the sphere):

* Poisson kernel  P(x, y') = (1 - |x|^2) / |x - y'|^n, so P(0, .) = 1 and the
  zonal expansion sum_k r^k Z_k(x'.y') holds with no extra constant.
* Weighted kernel of order beta:
  2 sum_k Gamma(beta+1+k+n/2) / (Gamma(beta+1) Gamma(k+n/2)) (r rho)^k Z_k,
  evaluated either by the truncated series or, for integer beta, by an exact
  rational closed form obtained from the generating identity
  (q d/dq + n/2) ... (q d/dq + n/2 + beta) applied to the Poisson kernel.

Half-space: P(x, t) = c_n t / (|x|^2 + t^2)^{(n+1)/2} normalized to unit mass,
and Q_m(z, w) = ((-2)^{m+1} / m!) d^{m+1}/dt^{m+1} P(x-y, t+s), computed from a
precomputed closed-form term table (never numerical differentiation).

Near-boundary evaluation is done in the shifted variables (1 - r rho,
1 - x'.y'); the quantity 1 - 2 q u + q^2 is assembled as
(1-q)^2 + 2 q (1-u), which is free of cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .spharm import HarmonicBasis, dim_harmonics, zonal_matrix

__all__ = [
    "BallPoint",
    "HalfSpacePoint",
    "poisson_ball",
    "poisson_ball_series",
    "bergman_coefficients",
    "bergman_series_degree",
    "bergman_q_ball",
    "bergman_q_ball_closed",
    "closed_kernel_fn",
    "ZonalBallFunction",
    "extremal_fmy",
    "extremal_fmy_zonal",
    "poisson_halfspace",
    "halfspace_kernel_terms",
    "bergman_q_halfspace",
    "bergman_q_halfspace_values",
]


@dataclass(frozen=True)
class BallPoint:
    """Point r*x' of the open unit ball, stored as radius and unit direction."""

    radius: float
    direction: np.ndarray

    def __post_init__(self):
        if not 0.0 <= self.radius < 1.0:
            raise ValueError("radius must lie in [0, 1)")
        d = np.asarray(self.direction, dtype=float)
        nrm = float(np.linalg.norm(d))
        if abs(nrm - 1.0) > 1e-10:
            raise ValueError("direction must be a unit vector")
        object.__setattr__(self, "direction", d / nrm)

    @classmethod
    def from_vector(cls, x) -> "BallPoint":
        x = np.asarray(x, dtype=float)
        r = float(np.linalg.norm(x))
        if r == 0.0:
            e = np.zeros(x.size)
            e[0] = 1.0
            return cls(0.0, e)
        return cls(r, x / r)

    @property
    def vector(self) -> np.ndarray:
        return self.radius * self.direction

    @property
    def dimension(self) -> int:
        return int(self.direction.size)


@dataclass(frozen=True)
class HalfSpacePoint:
    """Point (y, t) of the upper half-space, t > 0."""

    horizontal: np.ndarray
    height: float

    def __post_init__(self):
        if self.height <= 0:
            raise ValueError("height must be > 0")
        object.__setattr__(self, "horizontal",
                           np.asarray(self.horizontal, dtype=float))

    @property
    def dimension(self) -> int:
        return int(self.horizontal.size)


def _one_minus_dot(xp: np.ndarray, yp: np.ndarray):
    # 1 - x'.y' = |x' - y'|^2 / 2 for unit vectors; stable when nearly aligned
    d = xp - yp
    return 0.5 * np.sum(d * d, axis=-1)


def poisson_ball(x: BallPoint, yp) -> float:
    """Poisson kernel (1-|x|^2)/|x-y'|^n at a ball point and a unit vector."""
    yp = np.asarray(yp, dtype=float)
    if abs(float(np.dot(yp, yp)) - 1.0) > 1e-10:
        raise ValueError("boundary point must be a unit vector")
    n = x.dimension
    r = x.radius
    omq = 1.0 - r
    omu = float(_one_minus_dot(x.direction, yp))
    dist2 = omq * omq + 2.0 * r * omu
    return (1.0 - r * r) / dist2 ** (n / 2)


def poisson_ball_series(x: BallPoint, yp, max_degree: int) -> float:
    """Truncated zonal expansion sum_{k<=K} r^k Z_k(x'.y')."""
    yp = np.asarray(yp, dtype=float)
    n = x.dimension
    u = float(np.dot(x.direction, yp))
    Z = zonal_matrix(n, max_degree, u)[:, 0]
    powers = x.radius ** np.arange(max_degree + 1)
    return float(np.dot(powers, Z))


def bergman_coefficients(beta: float, n: int, degrees) -> np.ndarray:
    """Series coefficients 2 Gamma(beta+1+k+n/2)/(Gamma(beta+1) Gamma(k+n/2)).

    Computed through log-gamma differences; valid for any real beta > -1.
    """
    if beta <= -1:
        raise ValueError("kernel order must be > -1")
    k = np.asarray(degrees, dtype=float)
    return 2.0 * np.exp(gammaln(beta + 1 + k + n / 2) - gammaln(beta + 1)
                        - gammaln(k + n / 2))


def bergman_series_degree(beta: float, n: int, q: float, tol: float = 1e-12) -> int:
    """Truncation degree K making the geometric series tail below tol relative.

    Bounds the tail by coef(K) d_K q^K / (1-q) against the crude value floor
    coef(0); deterministic in its inputs.
    """
    if not 0.0 <= q < 1.0:
        raise ValueError("series requires |x||y| < 1")
    if q == 0.0:
        return 1
    logq = math.log(q)
    k = max(8, int(math.log(tol) / logq))
    while True:
        log_tail = (math.log(2.0) + gammaln(beta + 1 + k + n / 2)
                    - gammaln(beta + 1) - gammaln(k + n / 2)
                    + math.log(dim_harmonics(n, k)) + k * logq
                    - math.log1p(-q))
        if log_tail < math.log(tol):
            return k
        k = int(k * 1.5) + 8


def bergman_q_ball(beta: float, x: BallPoint, y: BallPoint,
                   max_degree: int | None = None, tol: float = 1e-12) -> float:
    """Weighted kernel of order beta at two ball points, by truncated series."""
    n = x.dimension
    q = x.radius * y.radius
    if q >= 1.0:
        raise ValueError("series diverges: |x||y| must be < 1")
    K = bergman_series_degree(beta, n, q, tol) if max_degree is None else max_degree
    u = float(np.dot(x.direction, y.direction))
    Z = zonal_matrix(n, K, u)[:, 0]
    coefs = bergman_coefficients(beta, n, np.arange(K + 1))
    return float(np.dot(coefs * q ** np.arange(K + 1), Z))


@lru_cache(maxsize=32)
def _closed_numerator(n: int, beta: int):
    """Numerator polynomial of the integer-order kernel in shifted variables.

    The kernel equals N(v, w) / D^{n/2+beta+1} with v = 1-q, w = 1-u and
    D = v^2 + 2(1-v)w; N is produced symbolically once and lambdified.
    """
    import sympy as sp

    q, u, v, w = sp.symbols("q u v w", real=True)
    gen = (1 - q ** 2) / (1 - 2 * q * u + q ** 2) ** sp.Rational(n, 2)
    expr = gen
    for i in range(beta + 1):
        expr = q * sp.diff(expr, q) + (sp.Rational(n, 2) + i) * expr
    expr = expr * 2 / sp.factorial(beta)
    D = 1 - 2 * q * u + q ** 2
    power = sp.Rational(n, 2) + beta + 1
    numer = sp.cancel(sp.together(expr * D ** power))
    numer = sp.expand(numer.subs({q: 1 - v, u: 1 - w}))
    return sp.lambdify((v, w), numer, modules="numpy"), float(power)


def closed_kernel_fn(n: int, beta: int):
    """Vectorized exact evaluator f(omq, omu) for integer beta >= 0.

    Arguments are 1 - r*rho and 1 - x'.y'; supply them directly (e.g. via
    (1-r) + r(1-rho) and |x'-y'|^2/2) to avoid cancellation near the boundary.
    """
    if beta < 0 or int(beta) != beta:
        raise ValueError("closed form requires integer order >= 0")
    numer, power = _closed_numerator(n, int(beta))

    def fn(omq, omu):
        omq = np.asarray(omq, dtype=float)
        omu = np.asarray(omu, dtype=float)
        D = omq * omq + 2.0 * (1.0 - omq) * omu
        return numer(omq, omu) / D ** power

    return fn


def bergman_q_ball_closed(beta: int, x: BallPoint, y: BallPoint) -> float:
    """Exact rational evaluation of the integer-order ball kernel."""
    n = x.dimension
    fn = closed_kernel_fn(n, beta)
    omq = (1.0 - x.radius) + x.radius * (1.0 - y.radius)
    omu = float(_one_minus_dot(x.direction, y.direction))
    return float(fn(omq, omu))


class ZonalBallFunction:
    """Ball function x -> sum_k a_k |x|^k Z_k(x'.axis) given radial weights a_k.

    Covers kernel sections like x -> Q(x, y) without materializing the ragged
    coefficient array; evaluation cost is O(K * points) via the zonal
    recurrence.
    """

    def __init__(self, dimension: int, axis, radial_coeffs):
        self.dimension = int(dimension)
        axis = np.asarray(axis, dtype=float)
        self.axis = axis / np.linalg.norm(axis)
        self.radial_coeffs = np.asarray(radial_coeffs, dtype=float)

    @property
    def max_degree(self) -> int:
        return self.radial_coeffs.size - 1

    def sphere_values_many(self, radii, points) -> np.ndarray:
        rs = np.atleast_1d(np.asarray(radii, dtype=float))
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        u = np.clip(pts @ self.axis, -1.0, 1.0)
        K = self.max_degree
        Z = zonal_matrix(self.dimension, K, u)          # (K+1, N)
        powers = np.power(rs[:, None], np.arange(K + 1)[None, :])
        return powers @ (self.radial_coeffs[:, None] * Z)

    def __call__(self, x: BallPoint) -> float:
        return float(self.sphere_values_many([x.radius], x.direction[None, :])[0, 0])


def extremal_fmy(m: float, y: BallPoint, max_degree: int):
    """Kernel section x -> Q_m(x, y) as a finite coefficient expansion.

    Coefficients are 2 Gamma(m+1+k+n/2)/(Gamma(m+1) Gamma(k+n/2)) rho^k
    Y_j^(k)(y'); requires m > 0.
    """
    from .harmonic import HarmonicFunction

    if m <= 0:
        raise ValueError("kernel order must be > 0")
    n = y.dimension
    basis = HarmonicBasis(n, max_degree)
    coefs = bergman_coefficients(m, n, np.arange(max_degree + 1))
    ymat = basis.matrix(y.direction[None, :])[:, 0]
    rows = []
    for k in range(max_degree + 1):
        o = basis.offsets[k]
        rows.append(coefs[k] * y.radius ** k * ymat[o:o + basis.dims[k]])
    return HarmonicFunction.from_rows(n, rows)


def extremal_fmy_zonal(m: float, y: BallPoint, max_degree: int | None = None,
                       tol: float = 1e-12) -> ZonalBallFunction:
    """Same kernel section in zonal form; preferred for |y| close to 1."""
    if m <= 0:
        raise ValueError("kernel order must be > 0")
    n = y.dimension
    if max_degree is None:
        max_degree = bergman_series_degree(m, n, y.radius, tol)
    ks = np.arange(max_degree + 1)
    coeffs = bergman_coefficients(m, n, ks) * y.radius ** ks
    return ZonalBallFunction(n, y.direction, coeffs)


# ---------------------------------------------------------------------------
# half-space kernels


def _poisson_constant(n: int) -> float:
    # unit-mass normalization of t / (|x|^2 + t^2)^((n+1)/2) over R^n
    return math.exp(gammaln((n + 1) / 2)) / math.pi ** ((n + 1) / 2)


def poisson_halfspace(x, t: float, dimension: int | None = None) -> float:
    """Half-space Poisson kernel c_n t/(|x|^2+t^2)^((n+1)/2), unit total mass."""
    x = np.asarray(x, dtype=float)
    n = x.size if dimension is None else dimension
    if t <= 0:
        raise ValueError("height must be > 0")
    cn = _poisson_constant(n)
    return cn * t / (float(np.dot(x, x)) + t * t) ** ((n + 1) / 2)


@lru_cache(maxsize=64)
def halfspace_kernel_terms(m: int, n: int):
    """Closed-form term table for the order-m half-space kernel.

    Returns a tuple of (i, l, coef) triples representing
    sum coef * tau^i * (a + tau^2)^(-(n+1)/2 - l) with a = |x-y|^2 and
    tau = t + s, obtained by repeatedly differentiating the Poisson kernel
    in closed form.
    """
    if m < 0 or int(m) != m:
        raise ValueError("half-space kernel order must be an integer >= 0")
    terms = {(1, 0): _poisson_constant(n)}
    for _ in range(m + 1):
        new: dict = {}
        for (i, l), c in terms.items():
            p = (n + 1) / 2 + l
            if i >= 1:
                new[(i - 1, l)] = new.get((i - 1, l), 0.0) + i * c
            new[(i + 1, l + 1)] = new.get((i + 1, l + 1), 0.0) - 2.0 * p * c
        terms = new
    scale = (-2.0) ** (m + 1) / math.factorial(m)
    return tuple((i, l, scale * c) for (i, l), c in sorted(terms.items()))


def bergman_q_halfspace_values(m: int, n: int, sq_dist, height_sum) -> np.ndarray:
    """Vectorized order-m kernel from |x-y|^2 and t+s arrays."""
    a = np.asarray(sq_dist, dtype=float)
    tau = np.asarray(height_sum, dtype=float)
    tau2 = a + tau * tau
    out = np.zeros(np.broadcast(a, tau).shape)
    for i, l, c in halfspace_kernel_terms(m, n):
        out = out + c * tau ** i * tau2 ** (-((n + 1) / 2 + l))
    return out


def bergman_q_halfspace(m: int, z: HalfSpacePoint, w: HalfSpacePoint) -> float:
    """Order-m half-space kernel at two points."""
    if z.dimension != w.dimension:
        raise ValueError("points must share a dimension")
    d = z.horizontal - w.horizontal
    return float(bergman_q_halfspace_values(m, z.dimension,
                                            float(np.dot(d, d)),
                                            z.height + w.height))
