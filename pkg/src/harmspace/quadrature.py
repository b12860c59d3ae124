"""Deterministic quadrature on [0,1) with endpoint power weights, product rules
on the unit sphere for n in {2, 3}, and decay-exponent regression.

All sphere rules integrate against the probability measure sigma with
sigma(S^{n-1}) = 1; every norm and kernel in this package uses that
convention.  Radial rules subdivide [0, 1) dyadically toward r = 1 and treat
a (1-r)^alpha weight on the final panel with Gauss-Jacobi nodes, so weights
with alpha in (-1, 0) are handled without a change of variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

__all__ = [
    "EvaluationError",
    "RadialRule",
    "SphereRule",
    "BallRule",
    "DecayFit",
    "radial_rule",
    "sphere_rule",
    "ball_rule",
    "ball_rule_from_json",
    "ball_rule_to_json",
    "integrate_radial",
    "integrate_weighted_01",
    "integrate_sphere",
    "zonal_rule",
    "fit_decay_exponent",
    "fit_decay_from_samples",
]

DEFAULT_REL_TOL = 1e-8


class EvaluationError(ValueError):
    """An integrand returned a non-finite value; ``node`` is the offending point."""

    def __init__(self, message: str, node=None):
        super().__init__(message)
        self.node = node


@lru_cache(maxsize=256)
def _legendre(order: int):
    x, w = roots_legendre(order)
    return x, w


@lru_cache(maxsize=256)
def _jacobi(order: int, alpha: float):
    # weight (1-x)^alpha on [-1, 1]
    x, w = roots_jacobi(order, alpha, 0.0)
    return x, w


def _dyadic_edges(depth: int) -> np.ndarray:
    return np.concatenate([[0.0], 1.0 - 2.0 ** (-np.arange(1, depth + 1))])


@dataclass(frozen=True)
class RadialRule:
    """Composite Gauss-Legendre nodes on dyadic panels of [0, 1).

    ``nodes``/``weights`` cover [0, 1 - 2^-depth]; the remaining sliver up to 1
    is integrated per call with a Gauss-Jacobi panel matched to the weight
    exponent, so the stored data is weight-independent.
    """

    order: int
    depth: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    tail_lo: float

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if self.depth < 2:
            raise ValueError("depth must be >= 2")


def radial_rule(order: int = 16, depth: int = 36) -> RadialRule:
    """Build the dyadically refined radial rule of the given panel order/depth."""
    edges = _dyadic_edges(depth)
    x, w = _legendre(order)
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        h = (b - a) / 2
        nodes.append((a + b) / 2 + h * x)
        weights.append(h * w)
    return RadialRule(
        order=order,
        depth=depth,
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
        tail_lo=float(edges[-1]),
    )


def _eval_integrand(f, nodes: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(nodes), dtype=float)
    if vals.shape != nodes.shape:
        vals = np.broadcast_to(vals, nodes.shape).astype(float)
    bad = ~np.isfinite(vals)
    if bad.any():
        node = float(nodes[np.argmax(bad)])
        raise EvaluationError(f"integrand non-finite at r={node!r}", node=node)
    return vals


def integrate_radial(f, weight_exponent: float, rule: RadialRule) -> float:
    """Approximate ``int_0^1 f(r) (1-r)^alpha dr`` for alpha > -1.

    Parameters
    ----------
    f : callable
        Vectorized integrand; receives an ndarray of radii in [0, 1) and must
        return values of the same shape (scalars broadcast).
    weight_exponent : float
        Exponent alpha of the (1-r)^alpha weight, alpha > -1.
    rule : RadialRule
        Node layout; the result is deterministic for a fixed rule.
    """
    alpha = float(weight_exponent)
    if alpha <= -1:
        raise ValueError("weight exponent must be > -1")
    vals = _eval_integrand(f, rule.nodes)
    base = float(np.dot(rule.weights * (1.0 - rule.nodes) ** alpha, vals))
    # Gauss-Jacobi panel on [tail_lo, 1) absorbs the (1-r)^alpha factor exactly.
    xj, wj = _jacobi(rule.order, alpha)
    half = (1.0 - rule.tail_lo) / 2
    tail_nodes = rule.tail_lo + (1.0 + xj) * half
    tail_vals = _eval_integrand(f, tail_nodes)
    tail = half ** (alpha + 1) * float(np.dot(wj, tail_vals))
    return base + tail


def integrate_weighted_01(f, weight_exponent: float, a: float, b: float,
                          order: int = 16, depth: int = 36) -> float:
    """``int_a^b f(r) (1-r)^alpha dr`` on a subinterval of [0, 1].

    The panel layout refines dyadically toward 1; when b == 1 the final panel
    uses Gauss-Jacobi nodes for the weight.  Used for piecewise integrands
    (step-function factors) whose pieces do not span all of [0, 1).
    """
    alpha = float(weight_exponent)
    if alpha <= -1:
        raise ValueError("weight exponent must be > -1")
    if not 0.0 <= a < b <= 1.0:
        raise ValueError("need 0 <= a < b <= 1")
    singular = b == 1.0
    inner_hi = 1.0 - 2.0 ** (-depth) if singular else b
    edges = [a]
    for e in _dyadic_edges(depth):
        if a < e < inner_hi:
            edges.append(float(e))
    edges.append(inner_hi)
    x, w = _legendre(order)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi <= lo:
            continue
        h = (hi - lo) / 2
        nodes = (lo + hi) / 2 + h * x
        vals = _eval_integrand(f, nodes)
        total += h * float(np.dot(w * (1.0 - nodes) ** alpha, vals))
    if singular:
        xj, wj = _jacobi(order, alpha)
        half = (1.0 - inner_hi) / 2
        nodes = inner_hi + (1.0 + xj) * half
        total += half ** (alpha + 1) * float(np.dot(wj, _eval_integrand(f, nodes)))
    return total


@dataclass(eq=False)
class SphereRule:
    """Quadrature nodes on S^{n-1} with weights summing to 1 (probability measure)."""

    dimension: int
    degree: int
    points: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __len__(self):
        return self.points.shape[0]


def sphere_rule(dimension: int, degree: int = 32) -> SphereRule:
    """Product rule on S^{n-1}, exact on spherical harmonics up to ``degree``.

    n = 2 uses the equispaced trapezoid rule (spectrally exact on trigonometric
    polynomials); n = 3 uses Gauss-Legendre in cos(theta) times an equispaced
    azimuthal grid.
    """
    if dimension == 2:
        m = max(degree + 1, 8)
        theta = 2 * np.pi * np.arange(m) / m
        points = np.column_stack([np.cos(theta), np.sin(theta)])
        weights = np.full(m, 1.0 / m)
        return SphereRule(2, m - 1, points, weights)
    if dimension == 3:
        nt = degree // 2 + 1
        np_ = degree + 2
        u, wu = _legendre(nt)
        theta = np.arccos(u)
        phi = 2 * np.pi * np.arange(np_) / np_
        TH = np.repeat(theta, np_)
        PH = np.tile(phi, nt)
        pts = np.column_stack([np.sin(TH) * np.cos(PH),
                               np.sin(TH) * np.sin(PH),
                               np.cos(TH)])
        wts = np.repeat(wu / 2, np_) / np_
        return SphereRule(3, min(2 * nt - 1, np_ - 1), pts, wts)
    raise ValueError("sphere rules are implemented for dimension 2 and 3 only")


def integrate_sphere(f, rule: SphereRule) -> float:
    """Integrate f over S^{n-1} against the probability measure sigma."""
    vals = np.asarray(f(rule.points), dtype=float)
    if vals.shape != (len(rule),):
        vals = np.broadcast_to(vals, (len(rule),)).astype(float)
    if not np.isfinite(vals).all():
        idx = int(np.argmax(~np.isfinite(vals)))
        raise EvaluationError("integrand non-finite on the sphere",
                              node=rule.points[idx])
    return float(np.dot(rule.weights, vals))


@lru_cache(maxsize=64)
def zonal_rule(dimension: int, order: int = 10, min_angle_log2: int = -34):
    """Rule for integrals of g(x'.e) over the sphere, refined toward x' = e.

    Returns (one_minus_u, weights) with one_minus_u = 1 - cos(theta) computed
    stably; sum(weights) integrates the constant 1 to 1.  The colatitude panels
    shrink dyadically to 2^min_angle_log2, resolving kernels that concentrate
    on caps of width down to that scale.
    """
    if dimension not in (2, 3):
        raise ValueError("dimension must be 2 or 3")
    edges = [0.0] + [2.0 ** k for k in range(min_angle_log2, 2)] + [np.pi]
    x, w = _legendre(order)
    thetas, wts = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        h = (b - a) / 2
        thetas.append((a + b) / 2 + h * x)
        wts.append(h * w)
    theta = np.concatenate(thetas)
    wt = np.concatenate(wts)
    omu = 2.0 * np.sin(theta / 2) ** 2
    if dimension == 2:
        weights = wt / np.pi
    else:
        weights = wt * np.sin(theta) / 2
    return omu, weights


@dataclass(frozen=True)
class BallRule:
    """Radial x sphere product rule for integrals over the unit ball.

    The ball measure is r^{n-1} dr dsigma(x'); integrals of 1 over the ball
    therefore equal 1/n.
    """

    radial: RadialRule
    sphere: SphereRule

    @property
    def dimension(self) -> int:
        return self.sphere.dimension


def ball_rule(dimension: int, order: int = 16, depth: int = 36,
              sphere_degree: int | None = None) -> BallRule:
    if sphere_degree is None:
        sphere_degree = 2 * order
    return BallRule(radial_rule(order, depth), sphere_rule(dimension, sphere_degree))


def ball_rule_to_json(rule: BallRule) -> dict:
    return {"dimension": rule.dimension, "order": rule.radial.order,
            "depth": rule.radial.depth}


def ball_rule_from_json(doc: dict) -> BallRule:
    return ball_rule(int(doc["dimension"]), int(doc["order"]), int(doc["depth"]),
                     sphere_degree=doc.get("sphere_degree"))


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit of log(value) against log(1-rho)."""

    samples: tuple
    slope: float
    residual: float


def fit_decay_from_samples(rho: np.ndarray, values: np.ndarray) -> DecayFit:
    rho = np.asarray(rho, dtype=float)
    values = np.asarray(values, dtype=float)
    if rho.size < 8:
        raise ValueError("need at least 8 samples for a decay fit")
    gap = 1.0 - rho
    if gap.min() <= 0:
        raise ValueError("all grid points must satisfy rho < 1")
    if gap.max() / gap.min() < 100.0:
        raise ValueError("grid must span at least two decades of 1-rho")
    if (values <= 0).any():
        raise ValueError("decay fit requires positive sample values")
    lx = np.log(gap)
    ly = np.log(values)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return DecayFit(
        samples=tuple(zip(rho.tolist(), values.tolist())),
        slope=float(slope),
        residual=float(np.sqrt(np.mean(resid ** 2))),
    )


def fit_decay_exponent(g, rho_grid) -> DecayFit:
    """Fit the exponent e in value(rho) ~ (1-rho)^e from samples of g.

    ``g`` is evaluated pointwise on ``rho_grid`` (at least 8 points, with 1-rho
    spanning two decades); values must be finite and positive.
    """
    rho = np.asarray(rho_grid, dtype=float)
    values = np.array([float(g(r)) for r in rho])
    if not np.isfinite(values).all():
        idx = int(np.argmax(~np.isfinite(values)))
        raise EvaluationError("non-finite sample in decay fit", node=float(rho[idx]))
    return fit_decay_from_samples(rho, values)
