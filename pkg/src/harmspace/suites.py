"""Desk-scale verification suites.

Each suite turns one identity, inequality, or asymptotic statement about the
weighted harmonic-function spaces into a deterministic numerical experiment:
exact identities are checked at tight tolerances, one-sided bounds as
bounded-ratio experiments stable under grid refinement, and asymptotic
statements by fitting decay exponents on geometric grids approaching the
boundary.  A suite is a pure function of its configuration (including the
RNG seed), so re-running with the same config reproduces the report
byte-for-byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .harmonic import (CoefficientField, HarmonicFunction,
                       pairing_identity_check)
from .kernels import (BallPoint, bergman_coefficients,
                      bergman_q_halfspace_values, closed_kernel_fn,
                      extremal_fmy, extremal_fmy_zonal, poisson_ball,
                      poisson_ball_series)
from .multipliers import (MultiplierProblem, random_family,
                          verify_multiplier_theorem,
                          verify_young_proposition)
from .norms import SpaceSpec, space_norm
from .quadrature import (ball_rule, fit_decay_from_samples, integrate_radial,
                         integrate_weighted_01, radial_rule, sphere_rule,
                         zonal_rule, _legendre)
from .reports import CaseResult, VerificationReport
from .spharm import HarmonicBasis, dim_harmonics, zonal
from .distance import distance_bound_check, s2_integral

__all__ = ["SuiteConfig", "ConfigError", "Suite", "SUITES", "run_suite",
           "list_suites", "make_config"]


class ConfigError(ValueError):
    """A configuration parameter lies outside the admissible range."""


@dataclass(frozen=True)
class SuiteConfig:
    """Deterministic description of one suite run."""

    suite: str
    n: int = 2
    seed: int = 20260809
    tier: str = "desk"
    params: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def tol(self, key: str, default: float) -> float:
        return float(self.tolerances.get(key, default))

    def par(self, key: str, default):
        return self.params.get(key, default)


def _require(cond: bool, constraint: str):
    if not cond:
        raise ConfigError(f"configuration violates: {constraint}")


def _gamma_closed(s: float, t: float, n: int) -> float:
    return 0.5 * math.exp(gammaln(s + 1) + gammaln(n / 2 + t)
                          - gammaln(s + 1 + n / 2 + t))


# ---------------------------------------------------------------------------
# exact identities


def _suite_gamma_exact(cfg: SuiteConfig) -> VerificationReport:
    tol = cfg.tol("rel", 1e-8)
    svals = cfg.par("s_grid", (-0.5, 0.0, 1.0, 2.5))
    tvals = cfg.par("t_grid", (0.0, 0.5, 3.0))
    nvals = cfg.par("n_grid", (2, 3))
    for s in svals:
        _require(s > -1, "s > -1")
    rule = radial_rule(order=cfg.par("order", 16), depth=cfg.par("depth", 36))
    cases = []
    for s in svals:
        for t in tvals:
            for n in nvals:
                _require(2 * t + n > 0, "2t + n > 0")
                exact = _gamma_closed(s, t, n)

                def f(r, s=s, t=t, n=n):
                    return (1.0 + r) ** s * r ** (2 * t + n - 1)

                val = integrate_radial(f, s, rule)
                rel = abs(val - exact) / abs(exact)
                cases.append(CaseResult(
                    f"s={s},t={t},n={n}", val, exact, tol, rel <= tol,
                    {"rel_error": rel}))
    return VerificationReport("gamma-exact", _cfg_echo(cfg), cases)


def _random_direction(rng, n):
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def _suite_poisson_consistency(cfg: SuiteConfig) -> VerificationReport:
    tol_series = cfg.tol("series", 1e-8)
    tol_addition = cfg.tol("addition", 1e-10)
    rng = np.random.default_rng(cfg.seed)
    count = cfg.par("samples", 200)
    kmax = cfg.par("addition_degree", 12)
    pairs = cfg.par("addition_samples", 100)
    cases = []
    worst = {2: 0.0, 3: 0.0}
    for i in range(count):
        n = 2 if i % 2 == 0 else 3
        r = float(rng.uniform(0, 0.9))
        xp = _random_direction(rng, n)
        yp = _random_direction(rng, n)
        x = BallPoint(r, xp)
        closed = poisson_ball(x, yp)
        series = poisson_ball_series(x, yp, 600)
        worst[n] = max(worst[n], abs(closed - series))
    for n in (2, 3):
        cases.append(CaseResult(f"series-vs-closed-n{n}", worst[n], 0.0,
                                tol_series, worst[n] <= tol_series,
                                {"samples": count // 2}))
    add_worst = {2: 0.0, 3: 0.0}
    for n in (2, 3):
        basis = HarmonicBasis(n, kmax)
        for _ in range(pairs):
            xp = _random_direction(rng, n)
            yp = _random_direction(rng, n)
            mx = basis.matrix(xp[None, :])[:, 0]
            my = basis.matrix(yp[None, :])[:, 0]
            for k in range(kmax + 1):
                o = basis.offsets[k]
                d = basis.dims[k]
                lhs = zonal(n, k, xp, yp)
                rhs = float(np.dot(mx[o:o + d], my[o:o + d]))
                add_worst[n] = max(add_worst[n], abs(lhs - rhs))
        cases.append(CaseResult(f"addition-theorem-n{n}", add_worst[n], 0.0,
                                tol_addition, add_worst[n] <= tol_addition,
                                {"pairs": pairs, "max_degree": kmax}))
    return VerificationReport("poisson-consistency", _cfg_echo(cfg), cases)


def _random_polynomial(rng, n: int, max_degree: int) -> HarmonicFunction:
    rows = [rng.standard_normal(dim_harmonics(n, k))
            for k in range(max_degree + 1)]
    return HarmonicFunction.from_rows(n, rows)


def _reproduce_ball(f: HarmonicFunction, beta: int, x: BallPoint,
                    order=16, depth=30, sphere_degree=None) -> float:
    """Weighted kernel projection of f evaluated at x, by direct quadrature."""
    n = f.dimension
    if sphere_degree is None:
        # sized so the kernel's complex singularity at (1+q^2)/2q keeps the
        # product-rule error below 1e-9 for q <= 0.75
        sphere_degree = 96 if n == 2 else 72
    sr = sphere_rule(n, sphere_degree)
    rr = radial_rule(order, depth)
    kern = closed_kernel_fn(n, beta)
    omu = 0.5 * np.sum((sr.points - x.direction[None, :]) ** 2, axis=1)

    def integrand(rho):
        rho = np.atleast_1d(rho)
        fv = f.sphere_values_many(rho, sr.points)
        omq = (1.0 - x.radius) + x.radius * (1.0 - rho)
        kv = kern(omq[:, None], omu[None, :])
        inner = (kv * fv) @ sr.weights
        return inner * (1.0 + rho) ** beta * rho ** (n - 1)

    return integrate_radial(integrand, beta, rr)


def _suite_reproduction_ball(cfg: SuiteConfig) -> VerificationReport:
    tol = cfg.tol("abs", 1e-6)
    rng = np.random.default_rng(cfg.seed)
    betas = cfg.par("betas", (1, 2))
    points_per = cfg.par("points", 25)
    cases = []
    for n in (2, 3):
        f = _random_polynomial(rng, n, cfg.par("max_degree", 4))
        r_max = 0.8 if n == 2 else 0.75
        for beta in betas:
            worst = 0.0
            for _ in range(points_per // len(betas) + 1):
                x = BallPoint(float(rng.uniform(0, r_max)),
                              _random_direction(rng, n))
                direct = f.eval(x)
                projected = _reproduce_ball(f, beta, x)
                worst = max(worst, abs(direct - projected))
            cases.append(CaseResult(
                f"ball-n{n}-beta{beta}", worst, 0.0, tol, worst <= tol,
                {"points": points_per // len(betas) + 1}))
    return VerificationReport("reproduction-ball", _cfg_echo(cfg), cases)


class _ShiftedPoisson:
    """Half-space harmonic function (x, t) -> P(x, t + c)."""

    def __init__(self, n: int, shift: float = 1.0):
        self.dimension = n
        self.shift = shift
        from .kernels import _poisson_constant
        self._cn = _poisson_constant(n)

    def __call__(self, pts: np.ndarray, t: float) -> np.ndarray:
        pts = np.atleast_2d(pts)
        tau = t + self.shift
        return self._cn * tau / (np.sum(pts * pts, axis=1)
                                 + tau * tau) ** ((self.dimension + 1) / 2)


def _reproduce_halfspace(f, m: int, x0: np.ndarray, t0: float,
                         cut: float = 64.0, order: int = 14,
                         n_phi: int = 40) -> float:
    """Projection integral of f against the order-m kernel at (x0, t0)."""
    n = f.dimension
    gx, gw = _legendre(order)
    r_edges = [0.0] + [2.0 ** k for k in range(-4, int(math.log2(cut)) + 1)]
    s_edges = [0.0] + [2.0 ** k for k in range(-5, int(math.log2(cut)) + 1)]

    def pan(edges):
        ns, ws = [], []
        for a, b in zip(edges[:-1], edges[1:]):
            h = (b - a) / 2
            ns.append((a + b) / 2 + h * gx)
            ws.append(h * gw)
        return np.concatenate(ns), np.concatenate(ws)

    rr, rw = pan(r_edges)
    ss, sw = pan(s_edges)
    if n == 2:
        phis = 2 * math.pi * np.arange(n_phi) / n_phi
        dirs = np.column_stack([np.cos(phis), np.sin(phis)])
        ang_w = np.full(n_phi, 2 * math.pi / n_phi)
    else:
        sr = sphere_rule(3, 24)
        dirs, ang_w = sr.points, sr.weights * 4 * math.pi
    # polar grid for y centered at the evaluation point
    pts = x0[None, None, :] + rr[:, None, None] * dirs[None, :, :]
    flat = pts.reshape(-1, n)
    sq = np.repeat(rr ** 2, dirs.shape[0])
    total = 0.0
    for s_val, s_wt in zip(ss, sw):
        fv = f(flat, float(s_val))
        kv = bergman_q_halfspace_values(m, n, sq, t0 + s_val)
        ang = (fv * kv).reshape(rr.size, dirs.shape[0]) @ ang_w
        total += s_wt * s_val ** m * float(np.dot(rw * rr ** (n - 1), ang))
    return total


def _suite_reproduction_halfspace(cfg: SuiteConfig) -> VerificationReport:
    tol = cfg.tol("rel", 0.01)
    n = cfg.par("dimension", 2)
    m = cfg.par("m", 1)
    rng = np.random.default_rng(cfg.seed)
    f = _ShiftedPoisson(n)
    cases = []
    for i in range(cfg.par("points", 10)):
        x0 = rng.uniform(-1.5, 1.5, size=n)
        t0 = float(rng.uniform(0.2, 1.5))
        exact = float(f(x0[None, :], t0)[0])
        val = _reproduce_halfspace(f, m, x0, t0, cut=cfg.par("cut", 64.0))
        rel = abs(val - exact) / abs(exact)
        cases.append(CaseResult(f"halfspace-pt{i}", val, exact, tol,
                                rel <= tol, {"rel_error": rel}))
    return VerificationReport("reproduction-halfspace", _cfg_echo(cfg), cases)


# ---------------------------------------------------------------------------
# asymptotic exponents


def _deep_grid(j_lo: int, j_hi: int) -> np.ndarray:
    return 1.0 - 2.0 ** (-np.arange(j_lo, j_hi, dtype=float))


def _suite_radial_decay(cfg: SuiteConfig) -> VerificationReport:
    """Fitted exponent of int_0^1 (1-r)^a (1-rho r)^-lam dr as rho -> 1."""
    tol = cfg.tol("slope", 0.05)
    alphas = cfg.par("alphas", (0.0, 0.5))
    gaps = cfg.par("gaps", (0.5, 1.5))
    grid = _deep_grid(*cfg.par("fit_levels", (9, 17)))
    rule = radial_rule(16, cfg.par("depth", 40))
    cases = []
    for a in alphas:
        _require(a > -1, "alpha > -1")
        for gap in gaps:
            lam = a + 1 + gap
            _require(lam > a + 1, "lambda > alpha + 1")
            vals = []
            for rho in grid:
                vals.append(integrate_radial(
                    lambda r, rho=rho, lam=lam: ((1.0 - r) + r * (1.0 - rho)) ** (-lam),
                    a, rule))
            fit = fit_decay_from_samples(grid, np.array(vals))
            want = a + 1 - lam
            err = abs(fit.slope - want)
            cases.append(CaseResult(f"alpha={a},lambda={lam}", fit.slope,
                                    want, tol, err <= tol,
                                    {"residual": fit.residual}))
    return VerificationReport("radial-decay", _cfg_echo(cfg), cases)


def _suite_kernel_volume_decay(cfg: SuiteConfig) -> VerificationReport:
    """Growth of int_B |Q_beta(x,y)|^{gamma/(n+beta)} (1-|y|)^delta dy."""
    tol = cfg.tol("slope", 0.07)
    n = cfg.par("dimension", 3)
    betas = cfg.par("betas", (1, 2))
    deltas = cfg.par("deltas", (0.0, 0.5))
    gaps = cfg.par("gaps", (0.5, 1.5))
    grid = _deep_grid(*cfg.par("fit_levels", (7, 15)))
    rule = radial_rule(16, cfg.par("depth", 30))
    omu, w_zonal = zonal_rule(n)
    cases = []
    for beta in betas:
        kern = closed_kernel_fn(n, beta)
        for delta in deltas:
            _require(delta > -1, "delta > -1")
            for gap in gaps:
                gamma = n + delta + gap
                _require(gamma > n + delta, "gamma > n + delta")
                power = gamma / (n + beta)
                vals = []
                for r in grid:
                    def prof(rho, r=r, power=power):
                        rho = np.atleast_1d(rho)
                        omq = (1.0 - r) + r * (1.0 - rho)
                        kv = np.abs(kern(omq[:, None], omu[None, :])) ** power
                        return (kv @ w_zonal) * rho ** (n - 1)
                    vals.append(integrate_radial(prof, delta, rule))
                fit = fit_decay_from_samples(grid, np.array(vals))
                want = delta - gamma + n
                err = abs(fit.slope - want)
                cases.append(CaseResult(
                    f"beta={beta},delta={delta},gamma={gamma}", fit.slope,
                    want, tol, err <= tol, {"residual": fit.residual}))
    return VerificationReport("kernel-volume-decay", _cfg_echo(cfg), cases)


def _suite_kernel_halfspace_decay(cfg: SuiteConfig) -> VerificationReport:
    """Growth in t of the half-space kernel volume integrals."""
    tol = cfg.tol("slope", 0.07)
    n = cfg.par("dimension", 2)
    ms = cfg.par("ms", (0, 1))
    deltas = cfg.par("deltas", (0.0, 0.5))
    gaps = cfg.par("gaps", (0.5, 1.5))
    cut = cfg.par("cut", 64.0)
    t_grid = 2.0 ** (-np.arange(*cfg.par("fit_levels", (0, 10)), dtype=float))
    gx, gw = _legendre(cfg.par("order", 8))
    edges = [0.0] + [2.0 ** k for k in range(-14, int(math.log2(cut)) + 1)]
    ns_, ws_ = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        h = (b - a) / 2
        ns_.append((a + b) / 2 + h * gx)
        ws_.append(h * gw)
    rr = np.concatenate(ns_)
    rw = np.concatenate(ws_)
    area = 2 * math.pi ** (n / 2) / math.exp(gammaln(n / 2))
    cases = []
    for m in ms:
        for delta in deltas:
            _require(delta > -1, "delta > -1")
            for gap in gaps:
                gamma = n + 1 + delta + gap
                _require(gamma > n + 1 + delta, "gamma > n + 1 + delta")
                power = gamma / (n + m + 1)
                vals = []
                for t in t_grid:
                    kv = np.abs(bergman_q_halfspace_values(
                        m, n, (rr ** 2)[None, :], (t + rr)[:, None])) ** power
                    inner = kv @ (rw * rr ** (n - 1)) * area
                    vals.append(float(np.dot(rw * rr ** delta, inner)))
                slope = float(np.polyfit(np.log(t_grid), np.log(vals), 1)[0])
                want = delta - gamma + n + 1
                err = abs(slope - want)
                cases.append(CaseResult(
                    f"m={m},delta={delta},gamma={gamma}", slope, want, tol,
                    err <= tol, {}))
    return VerificationReport("kernel-halfspace-decay", _cfg_echo(cfg), cases)


def _kernel_radial_mean(n: int, beta: float, q_omq: np.ndarray,
                        s: float = 1.0, max_k: int | None = None) -> np.ndarray:
    """Sphere mean of |Q_beta| at the given 1-q values.

    Integer beta uses the exact rational form; fractional beta streams the
    zonal series in degree chunks so the degree bound can reach several
    hundred thousand without materializing the full zonal matrix.
    """
    omu, w = zonal_rule(n)
    if float(beta).is_integer():
        kern = closed_kernel_fn(n, int(beta))
        kv = np.abs(kern(q_omq[:, None], omu[None, :]))
        return ((kv ** s) @ w) ** (1.0 / s)
    qs = 1.0 - q_omq
    K = max_k if max_k is not None else int(min(50.0 / q_omq.min(), 5e5))
    u = 1.0 - omu
    acc = np.zeros((qs.size, u.size))
    log_q = np.log(qs)
    chunk = 8192
    # rolling recurrence state: poly holds degree k, poly_pm degree k-1
    poly_pm = np.ones_like(u)
    poly = u.copy()
    for k0 in range(0, K + 1, chunk):
        ks = np.arange(k0, min(k0 + chunk, K + 1))
        Z = np.empty((ks.size, u.size))
        for idx, k in enumerate(ks):
            if k == 0:
                Z[idx] = 1.0
                continue
            Z[idx] = 2 * poly if n == 2 else (2 * k + 1) * poly
            if n == 2:
                poly_pm, poly = poly, 2 * u * poly - poly_pm
            else:
                poly_pm, poly = poly, (((2 * k + 1) * u * poly
                                        - k * poly_pm) / (k + 1))
        coefs = bergman_coefficients(beta, n, ks)
        acc += (np.exp(log_q[:, None] * ks[None, :]) * coefs[None, :]) @ Z
    return ((np.abs(acc) ** s) @ w) ** (1.0 / s)


def _suite_kernel_sphere_mean(cfg: SuiteConfig) -> VerificationReport:
    """Sphere mean of |Q_beta(r x', y)| grows like (1-r rho)^-(1+beta)."""
    tol = cfg.tol("slope", 0.05)
    n = cfg.par("dimension", 2)
    betas = cfg.par("betas", (0.5, 1, 2))
    cases = []
    for beta in betas:
        _require(beta > -1, "beta > -1")
        if float(beta).is_integer():
            grid = _deep_grid(*cfg.par("fit_levels", (6, 14)))
        else:
            grid = _deep_grid(*cfg.par("series_fit_levels", (5, 13)))
        omq = (1.0 - grid) * (1.0 + grid)  # r = rho on the grid: 1-q = 1-rho^2
        vals = _kernel_radial_mean(n, beta, omq)
        fit = fit_decay_from_samples(grid ** 2, vals)
        want = -(1.0 + beta)
        err = abs(fit.slope - want)
        cases.append(CaseResult(f"beta={beta}", fit.slope, want, tol,
                                err <= tol, {"residual": fit.residual}))
    return VerificationReport("kernel-sphere-mean", _cfg_echo(cfg), cases)


def _suite_kernel_norm_growth(cfg: SuiteConfig) -> VerificationReport:
    """Norm growth of the kernel sections f_{m,y} as |y| -> 1, six norms."""
    tol = cfg.tol("slope", 0.07)
    n = cfg.par("dimension", 2)
    ms = cfg.par("ms", (1, 2))
    rule = radial_rule(16, cfg.par("depth", 36))
    omu, w_zonal = zonal_rule(n)
    cases = []
    for m in ms:
        kern = closed_kernel_fn(n, m)

        def m1_profile(rs, rho):
            rs = np.atleast_1d(rs)
            omq = (1.0 - rs) + rs * (1.0 - rho)
            kv = np.abs(kern(omq[:, None], omu[None, :]))
            return kv @ w_zonal

        def sup_profile(rs, rho):
            rs = np.atleast_1d(rs)
            omq = (1.0 - rs) + rs * (1.0 - rho)
            return np.abs(kern(omq, np.zeros_like(omq)))

        # sup-mean: positive coefficients put the max on the axis (u = 1)
        grid = _deep_grid(*cfg.par("sup_fit_levels", (5, 13)))
        sup_vals = np.array([sup_profile([r], r)[0] for r in grid])
        fit = fit_decay_from_samples(grid ** 2, sup_vals)
        _case_slope(cases, f"m={m}:sup-mean", fit.slope, -(n + m), tol)

        l1_vals = np.array([m1_profile([r], r)[0] for r in grid])
        fit = fit_decay_from_samples(grid ** 2, l1_vals)
        _case_slope(cases, f"m={m}:l1-mean", fit.slope, -(1 + m), tol)

        deep = _deep_grid(*cfg.par("fit_levels", (9, 17)))

        alpha = cfg.par("alpha_volume", 0.5)
        _require(m > alpha > -1, "m > alpha > -1 for the volume norm")
        vals = [integrate_radial(
            lambda rs, rho=rho: m1_profile(rs, rho) * np.atleast_1d(rs) ** (n - 1),
            alpha, rule) for rho in deep]
        fit = fit_decay_from_samples(deep, np.array(vals))
        _case_slope(cases, f"m={m}:volume-l1", fit.slope, alpha - m, tol)

        alpha_h = cfg.par("alpha_radial_sup", 1.0)
        _require(m > alpha_h - 1 and alpha_h >= 0,
                 "m > alpha - 1, alpha >= 0 for the radial-sup norm")
        rgrid = 1.0 - 2.0 ** (-np.linspace(0, 22, 89))
        vals = []
        for rho in deep:
            mm = m1_profile(rgrid, rho)
            vals.append(float(np.max((1.0 - rgrid) ** alpha_h * mm)))
        fit = fit_decay_from_samples(deep, np.array(vals))
        _case_slope(cases, f"m={m}:radial-sup-l1", fit.slope,
                    alpha_h - 1 - m, tol)

        alpha_b, p_b = cfg.par("alpha_mixed", 0.5), cfg.par("p_mixed", 2.0)
        _require(m > alpha_b - 1 and alpha_b > 0,
                 "m > alpha - 1, alpha > 0 for the mixed norm")
        vals = [integrate_radial(
            lambda rs, rho=rho: (m1_profile(rs, rho) ** p_b
                                 * (1.0 + np.atleast_1d(rs)) ** (alpha_b * p_b - 1)
                                 * np.atleast_1d(rs) ** (n - 1)),
            alpha_b * p_b - 1, rule) ** (1.0 / p_b) for rho in deep]
        fit = fit_decay_from_samples(deep, np.array(vals))
        _case_slope(cases, f"m={m}:mixed-l1", fit.slope, alpha_b - 1 - m, tol)

        _require(m > alpha_b - n, "m > alpha - n for the sup mixed norm")
        vals = [integrate_radial(
            lambda rs, rho=rho: (sup_profile(rs, rho) ** p_b
                                 * (1.0 + np.atleast_1d(rs)) ** (alpha_b * p_b - 1)
                                 * np.atleast_1d(rs) ** (n - 1)),
            alpha_b * p_b - 1, rule) ** (1.0 / p_b) for rho in deep]
        fit = fit_decay_from_samples(deep, np.array(vals))
        _case_slope(cases, f"m={m}:mixed-sup", fit.slope, alpha_b - n - m, tol)
    return VerificationReport("kernel-norm-growth", _cfg_echo(cfg), cases)


def _case_slope(cases, case_id, slope, want, tol):
    cases.append(CaseResult(case_id, float(slope), float(want), tol,
                            abs(slope - want) <= tol, {}))


# ---------------------------------------------------------------------------
# inequality and identity harnesses


def _random_step_function(rng, max_steps: int = 20):
    """Positive increasing step function on [0,1) as (breaks, cumulative values)."""
    k = int(rng.integers(3, max_steps))
    breaks = np.sort(rng.uniform(0.0, 1.0, size=k))
    jumps = rng.exponential(1.0, size=k) + 0.05
    base = rng.exponential(0.5) + 0.05
    levels = base + np.cumsum(jumps)
    return breaks, np.concatenate([[base], levels])


def _step_weighted_integral(breaks, levels, weight_pow, rho, gamma_pow,
                            r_pow, order=16, depth=24) -> float:
    """int_0^1 G(r)^1 (1-r)^w (1-rho r)^-g r^a dr for the step function G."""
    edges = np.concatenate([[0.0], breaks, [1.0]])
    total = 0.0
    for i, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        if b <= a:
            continue
        level = levels[i]

        def h(r, rho=rho, gamma_pow=gamma_pow, r_pow=r_pow):
            return (1.0 - rho * r) ** (-gamma_pow) * r ** r_pow

        total += level * integrate_weighted_01(h, weight_pow, a, b,
                                               order=order, depth=depth)
    return total


def _suite_increasing_weight_inequality(cfg: SuiteConfig) -> VerificationReport:
    """Subdivision inequality for increasing G against power weights.

    (int G (1-r)^b (1-rho r)^-g r^a dr)^q <= C int G^q (1-r)^{bq+q-1}
    (1-rho r)^{-qg} r^a dr for increasing positive G and q <= 1; checked as a
    bounded-ratio experiment, stable under quadrature-order doubling.
    """
    count = cfg.par("functions", 100)
    qs = cfg.par("qs", (0.3, 0.5, 1.0))
    rng = np.random.default_rng(cfg.seed)
    stability = cfg.tol("stability_factor", 2.0)
    cases = []
    for q in qs:
        _require(0 < q <= 1, "0 < q <= 1")
        max_ratio = {"base": 0.0, "fine": 0.0}
        for _ in range(count):
            breaks, levels = _random_step_function(rng)
            a = float(rng.choice([0.0, 1.0]))
            b = float(rng.choice([-0.5, 0.5]))
            g = float(rng.choice([0.5, 2.0]))
            rho = float(rng.choice([0.0, 0.9, 0.99]))
            for tag, order in (("base", 12), ("fine", 24)):
                lhs = _step_weighted_integral(breaks, levels, b, rho, g, a,
                                              order=order)
                rhs = _step_weighted_integral(breaks, levels ** q,
                                              b * q + q - 1, rho, q * g, a,
                                              order=order)
                ratio = lhs ** q / rhs
                max_ratio[tag] = max(max_ratio[tag], ratio)
        stable = (max_ratio["fine"] / max_ratio["base"] <= stability
                  and max_ratio["base"] / max_ratio["fine"] <= stability)
        cases.append(CaseResult(
            f"q={q}", max_ratio["base"], None, None,
            math.isfinite(max_ratio["base"]) and stable,
            {"max_ratio_refined": max_ratio["fine"], "functions": count}))
    return VerificationReport("increasing-weight-inequality", _cfg_echo(cfg),
                              cases)


def _suite_pairing_identity(cfg: SuiteConfig) -> VerificationReport:
    """Coefficient series vs both quadrature sides of the sphere pairing."""
    tol = cfg.tol("abs", 1e-8)
    count = cfg.par("samples", 50)
    rng = np.random.default_rng(cfg.seed)
    rule2 = ball_rule(2, order=16, depth=36, sphere_degree=16)
    rule3 = ball_rule(3, order=16, depth=36, sphere_degree=16)
    worst = 0.0
    cases = []
    for i in range(count):
        n = 2 if i % 2 == 0 else 3
        rule = rule2 if n == 2 else rule3
        f = _random_polynomial(rng, n, 6)
        g = _random_polynomial(rng, n, 6)
        m = float(rng.choice([-0.5, 0.5, 1.0, 2.5]))
        r = float(rng.uniform(0, 0.9))
        rho = float(rng.uniform(0, 0.9))
        yp = _random_direction(rng, n)
        chk = pairing_identity_check(f, g, m, r, rho, yp, rule)
        worst = max(worst, chk.max_deviation)
    cases.append(CaseResult("pairing-three-way", worst, 0.0, tol,
                            worst <= tol, {"samples": count}))
    # exact degenerate cases
    one2 = HarmonicFunction.constant(2, 1.0)
    chk = pairing_identity_check(one2, one2, 0.5, 0.3, 0.6,
                                 np.array([1.0, 0.0]), rule2)
    cases.append(CaseResult("pairing-constants", chk.series, 1.0, 1e-12,
                            abs(chk.series - 1.0) <= 1e-12
                            and chk.max_deviation <= 1e-10, {}))
    f3 = _random_polynomial(rng, 3, 4)
    g3 = _random_polynomial(rng, 3, 4)
    chk = pairing_identity_check(f3, g3, 1.0, 0.0, 0.5,
                                 np.array([0.0, 0.0, 1.0]), rule3)
    b0 = f3.rows[0][0] * g3.rows[0][0]
    cases.append(CaseResult("pairing-r-zero", chk.series, b0, 1e-10,
                            abs(chk.series - b0) <= 1e-10
                            and chk.max_deviation <= 1e-8, {}))
    return VerificationReport("pairing-identity", _cfg_echo(cfg), cases)


# ---------------------------------------------------------------------------
# multiplier characterizations


def _multiplier_sequences(rng, n: int, max_degree: int, count: int):
    """Seeded multiplier sequences with polynomial / exponential decay."""
    seqs = []
    profiles = [("poly", 1.5), ("poly", 3.0), ("exp", 0.5), ("exp", 1.0)]
    for i in range(count):
        kind, rate = profiles[i % len(profiles)]
        ks = np.arange(max_degree + 1, dtype=float)
        prof = (ks + 1) ** (-rate) if kind == "poly" else np.exp(-rate * ks)
        if i % 2 == 0:
            rows = [np.full(dim_harmonics(n, k), prof[k])
                    for k in range(max_degree + 1)]
        else:
            rows = [rng.standard_normal(dim_harmonics(n, k)) * prof[k]
                    for k in range(max_degree + 1)]
        seqs.append(CoefficientField(n, rows))
    return seqs


_SHAPES = {
    "mixed-to-mixed": dict(source=("B", 2.0, 1.0, 1.0),
                           target=("B", 3.0, 1.0, 1.0), m=1.5),
    "mixed-to-mixed-small": dict(source=("B", 0.7, 1.0, 1.0),
                                 target=("B", 2.0, 1.0, 1.0), m=1.5),
    # target weight sits 1/2 above the embedding borderline so the identity
    # sequence is itself a multiplier
    "mixed-to-radial-sup": dict(source=("B", 0.7, 1.0, 1.0),
                                target=("H", 2.0, 2.0, None), m=1.5),
    "hardy-to-hardy": dict(source=("H", 1.0, 0.5, None),
                           target=("H", 2.0, 1.0, None), m=1.0),
}


def _spec_from_tuple(tup) -> SpaceSpec:
    fam, p, alpha, q = tup
    return SpaceSpec(fam, p, alpha, q)


def _suite_multiplier(shape_key: str):
    def run(cfg: SuiteConfig) -> VerificationReport:
        shape = _SHAPES[shape_key]
        n = cfg.par("dimension", 2)
        rng = np.random.default_rng(cfg.seed)
        seq_count = cfg.par("sequences", 5)
        fam_size = cfg.par("family_size", 5)
        max_deg = cfg.par("max_degree", 12)
        stability = cfg.tol("stability_factor", 2.0)
        rule = ball_rule(n, order=12, depth=24,
                         sphere_degree=cfg.par("sphere_degree", 24))
        src = _spec_from_tuple(shape["source"])
        tgt = _spec_from_tuple(shape["target"])
        m = shape["m"]
        cases = []

        families = {
            "family-a": random_family(n, max_deg, fam_size, cfg.seed + 1,
                                      "poly", 2.0),
            "family-b": random_family(n, max_deg, fam_size, cfg.seed + 2,
                                      "exp", 0.7),
        }
        grids = {"grid-8": 8, "grid-10": 10}
        seqs = _multiplier_sequences(rng, n, max_deg, seq_count)
        ratio_stats = []
        probe_ok = True
        for i, c in enumerate(seqs):
            prob = MultiplierProblem(src, tgt, c, m)
            cs = {}
            for fam_name, family in families.items():
                for grid_name, levels in grids.items():
                    cert = verify_multiplier_theorem(
                        prob, family, rule, rho_levels=levels)
                    cs[f"{fam_name}/{grid_name}"] = cert.ratio_over_ns
                    if cert.probe_slope < -0.05:
                        probe_ok = False
            vals = np.array(list(cs.values()))
            stable = vals.max() / max(vals.min(), 1e-300) <= stability
            ratio_stats.append(vals.max())
            cases.append(CaseResult(
                f"seq{i}", float(vals.max()), None, None,
                bool(stable and np.isfinite(vals).all()),
                {"ratio_over_ns": {k: float(v) for k, v in cs.items()}}))
        cases.append(CaseResult("necessity-probes", 1.0 if probe_ok else 0.0,
                                1.0, 0.5, probe_ok, {}))

        zero = CoefficientField.zeros(n, max_deg)
        cert = verify_multiplier_theorem(
            MultiplierProblem(src, tgt, zero, m), families["family-a"], rule)
        cases.append(CaseResult(
            "zero-sequence", cert.ns_value, 0.0, 0.0,
            cert.ns_value == 0.0 and max(cert.operator_ratios) == 0.0, {}))

        ident_deg = cfg.par("identity_degree", 4096)
        ident = CoefficientField.ones(n, ident_deg)
        cert = verify_multiplier_theorem(
            MultiplierProblem(src, tgt, ident, m), families["family-a"], rule,
            rho_levels=cfg.par("identity_levels", 8))
        ratios_ok = all(math.isfinite(v) and v > 0
                        for v in cert.operator_ratios)
        cases.append(CaseResult(
            "identity-sequence", cert.ratio_over_ns, None, None,
            bool(ratios_ok and math.isfinite(cert.ns_value)
                 and cert.verdict == "bounded"),
            {"ns": cert.ns_value, "max_ratio": max(cert.operator_ratios)}))
        return VerificationReport(f"multiplier-{shape_key}", _cfg_echo(cfg),
                                  cases)

    return run


def _suite_young(cfg: SuiteConfig) -> VerificationReport:
    """Convolution bound between radial-sup spaces under dual exponents."""
    n = cfg.par("dimension", 2)
    rng = np.random.default_rng(cfg.seed)
    rule = ball_rule(n, order=12, depth=24, sphere_degree=24)
    family = random_family(n, cfg.par("max_degree", 10),
                           cfg.par("family_size", 6), cfg.seed + 3)
    cases = []
    configs = cfg.par("exponents", (
        {"p": 1.0, "q": 2.0, "r": 2.0, "alpha": 1.0, "beta": 1.0, "gamma": 0.0},
        {"p": 2.0, "q": 2.0, "r": math.inf, "alpha": 0.5, "beta": 1.0,
         "gamma": 0.5},
    ))
    for i, c in enumerate(configs):
        g = random_family(n, cfg.par("max_degree", 10), 1, cfg.seed + 10 + i)[0]
        chk = verify_young_proposition(g, c["p"], c["q"], c["r"], c["alpha"],
                                       c["beta"], c["gamma"], family, rule)
        cases.append(CaseResult(
            f"exponents-{i}", chk.max_ratio, None, None,
            math.isfinite(chk.max_ratio) and chk.max_ratio > 0,
            {"config": c, "g_norm": chk.g_norm}))
    zero = HarmonicFunction.constant(n, 0.0)
    chk = verify_young_proposition(zero, 1.0, 2.0, 2.0, 1.0, 1.0, 0.0,
                                   family, rule)
    cases.append(CaseResult("zero-g", chk.max_ratio, 0.0, 0.0,
                            chk.max_ratio == 0.0, {}))
    return VerificationReport("young-convolution", _cfg_echo(cfg), cases)


# ---------------------------------------------------------------------------
# distance functionals


def _suite_distance_ball(cfg: SuiteConfig) -> VerificationReport:
    n = cfg.par("dimension", 2)
    p = cfg.par("p", 2.0)
    # weight chosen so t = (alpha+n)/p sits just under beta+1 = 2: every
    # small-piece mechanism then scales linearly in the threshold
    alpha = cfg.par("alpha", 1.92)
    _require(p > 1, "p > 1")
    _require(alpha > -1, "alpha > -1")
    rng = np.random.default_rng(cfg.seed)
    add_tol = cfg.tol("additivity", 1e-6)
    slope_tol = cfg.tol("f1_slope", 0.1)
    t = (alpha + n) / p
    beta = int(math.floor(max(t - 1.0, alpha / p))) + 1

    family = {
        "constant": HarmonicFunction.constant(n, 1.0),
        "poly-a": _random_polynomial(rng, n, 4),
        "poly-b": _random_polynomial(rng, n, 4),
        "kernel-section": extremal_fmy(1.5, BallPoint(0.9, _random_direction(rng, n)),
                                       cfg.par("kernel_degree", 300)),
    }
    rule = ball_rule(n, order=cfg.par("norm_order", 6),
                     depth=cfg.par("norm_depth", 12),
                     sphere_degree=cfg.par("norm_sphere_degree", 12))
    cases = []
    for name, f in family.items():
        sup_w = _weighted_sup_of(f, t)
        j0 = cfg.par("eps_start", 7)
        eps_grid = [sup_w * 2.0 ** (-j)
                    for j in range(j0, j0 + cfg.par("eps_points", 5))]
        est = distance_bound_check(
            f, p, alpha, eps_grid, rule=rule, beta=beta,
            inner_depth=cfg.par("inner_depth", 14),
            inner_order=cfg.par("inner_order", 8), seed=cfg.seed)
        add_err = max(est.additivity_errors)
        add_ok = add_err <= add_tol * max(1.0, sup_w)
        eps_arr = np.array(est.thresholds)
        f1_arr = np.array(est.f1_sup_norms)
        slope = float(np.polyfit(np.log(eps_arr), np.log(f1_arr), 1)[0])
        slope_ok = abs(slope - 1.0) <= slope_tol
        finite_ok = True
        chain_ok = True
        for i, di in enumerate(est.integrals):
            if not di.infinite:
                bound = (2.0 ** (beta * p) * sup_w ** p * di.value) ** (1.0 / p)
                if not (est.f2_volume_norms[i] <= bound * 1.05 + 1e-12):
                    chain_ok = False
                if not math.isfinite(est.f2_volume_norms[i]):
                    finite_ok = False
        # thresholds are sorted increasing, so integrals must not increase
        vals_by_eps = [di.value for di in est.integrals]
        mono_ok = all(vals_by_eps[i] >= vals_by_eps[i + 1] - 1e-12
                      for i in range(len(vals_by_eps) - 1)
                      if not (est.integrals[i].infinite
                              or est.integrals[i + 1].infinite))
        cases.append(CaseResult(
            f"{name}:additivity", add_err, 0.0, add_tol, add_ok,
            {"sup_weighted": sup_w}))
        cases.append(CaseResult(
            f"{name}:f1-slope", slope, 1.0, slope_tol, slope_ok,
            {"f1_norms": list(est.f1_sup_norms),
             "thresholds": list(est.thresholds)}))
        cases.append(CaseResult(
            f"{name}:f2-chain-bound", 1.0 if chain_ok else 0.0, 1.0, 0.5,
            chain_ok and finite_ok,
            {"f2_norms": list(est.f2_volume_norms)}))
        cases.append(CaseResult(
            f"{name}:eps-monotone", 1.0 if mono_ok else 0.0, 1.0, 0.5,
            mono_ok, {"verdicts": [("inf" if d.infinite else "finite")
                                   for d in est.integrals]}))
    return VerificationReport("distance-ball", _cfg_echo(cfg), cases)


def _weighted_sup_of(f, t: float) -> float:
    rs = np.concatenate([[0.0], 1.0 - 2.0 ** (-np.linspace(0.5, 14, 28))])
    n = f.dimension
    if n == 2:
        ang = 2 * math.pi * np.arange(32) / 32
        pts = np.column_stack([np.cos(ang), np.sin(ang)])
    else:
        pts = sphere_rule(3, 16).points
    vals = np.abs(f.sphere_values_many(rs, pts))
    return float((vals * (1.0 - rs)[:, None] ** t).max())


def _suite_distance_halfspace(cfg: SuiteConfig) -> VerificationReport:
    n = cfg.par("dimension", 2)
    p = cfg.par("p", 2.0)
    alpha = cfg.par("alpha", 0.0)
    m = cfg.par("m", 1)
    lam = (alpha + n + 1) / p
    f = _ShiftedPoisson(n)
    # weighted sup of |f| t^lam over a grid
    ts = 2.0 ** np.linspace(-6, 6, 49)
    sup_w = 0.0
    for t in ts:
        v = float(np.abs(f(np.zeros((1, n)), float(t)))[0]) * t ** lam
        sup_w = max(sup_w, v)
    eps_list = [0.5 * sup_w, 0.25 * sup_w]
    cases = []
    values = {}
    for cut in (cfg.par("cut", 16.0), 2 * cfg.par("cut", 16.0)):
        for eps in eps_list:
            di = s2_integral(f, eps, p, alpha, m, cut_radius=cut,
                             cut_height=cut,
                             panels=cfg.par("panels", 9),
                             order=cfg.par("order", 5))
            values[(cut, eps)] = di
    base_cut = cfg.par("cut", 16.0)
    for eps in eps_list:
        a = values[(base_cut, eps)]
        b = values[(2 * base_cut, eps)]
        consistent = a.infinite == b.infinite
        if not a.infinite:
            consistent = consistent and (abs(a.value - b.value)
                                         <= 0.5 * max(a.value, b.value))
        cases.append(CaseResult(
            f"stability-eps={eps:.3g}", a.value if not a.infinite else None,
            None, None, consistent,
            {"doubled_value": None if b.infinite else b.value,
             "verdict": "infinite" if a.infinite else "finite"}))
    a0 = values[(base_cut, eps_list[0])]
    a1 = values[(base_cut, eps_list[1])]
    if not (a0.infinite or a1.infinite):
        mono = a1.value >= a0.value - 1e-12
    else:
        mono = True
    cases.append(CaseResult("eps-monotone", 1.0 if mono else 0.0, 1.0, 0.5,
                            mono, {}))
    big = 4.0 * sup_w
    di = s2_integral(f, big, p, alpha, m, cut_radius=base_cut,
                     cut_height=base_cut, panels=cfg.par("panels", 9),
                     order=cfg.par("order", 5))
    cases.append(CaseResult("empty-sublevel", di.value, 0.0, 1e-12,
                            (not di.infinite) and di.value == 0.0, {}))
    return VerificationReport("distance-halfspace", _cfg_echo(cfg), cases)


def _suite_embedding(cfg: SuiteConfig) -> VerificationReport:
    """Pointwise growth bound ratios stay bounded along boundary-concentrating
    kernel sections."""
    from .norms import embedding_check

    n = cfg.par("dimension", 2)
    p = cfg.par("p", 2.0)
    alpha = cfg.par("alpha", 0.5)
    slope_tol = cfg.tol("slope", 0.05)
    rule = ball_rule(n, order=12, depth=24, sphere_degree=16)
    m = cfg.par("m", 1.0)
    radii = cfg.par("radii", (0.5, 0.9, 0.99))
    cases = []
    one = HarmonicFunction.constant(n, 1.0)
    chk = embedding_check(one, p, alpha, rule)
    norm_one = space_norm(one, SpaceSpec("A", p, alpha), rule).value
    cases.append(CaseResult("constant", chk.sup_ratio, 1.0 / norm_one, 1e-6,
                            abs(chk.sup_ratio - 1.0 / norm_one) <= 1e-6,
                            {"argmax_r": chk.argmax_radius}))
    ratios = []
    e1 = np.zeros(n)
    e1[0] = 1.0
    for rho in radii:
        fy = extremal_fmy_zonal(m, BallPoint(rho, e1))
        chk = embedding_check(fy, p, alpha, rule)
        ratios.append(chk.sup_ratio)
    gaps = 1.0 - np.asarray(radii)
    slope = float(np.polyfit(np.log(gaps), np.log(np.array(ratios)), 1)[0])
    cases.append(CaseResult("kernel-family-trend", slope, 0.0, slope_tol,
                            slope >= -slope_tol,
                            {"ratios": [float(v) for v in ratios]}))
    scale_ok = True
    f = _random_polynomial(np.random.default_rng(cfg.seed), n, 4)
    r1 = embedding_check(f, p, alpha, rule).sup_ratio
    r7 = embedding_check(7.0 * f, p, alpha, rule).sup_ratio
    scale_ok = abs(r1 - r7) <= 1e-10 * max(1.0, r1)
    cases.append(CaseResult("scaling-invariance", abs(r1 - r7), 0.0, 1e-10,
                            scale_ok, {}))
    return VerificationReport("embedding-bound", _cfg_echo(cfg), cases)


def _suite_space_identities(cfg: SuiteConfig) -> VerificationReport:
    """Value identities and inclusions among the norm families."""
    n = cfg.par("dimension", 2)
    rng = np.random.default_rng(cfg.seed)
    tol = cfg.tol("identity", 1e-10)
    rule = ball_rule(n, order=12, depth=24, sphere_degree=24)
    cases = []
    for i in range(cfg.par("samples", 4)):
        f = _random_polynomial(rng, n, 6)
        a_inf = space_norm(f, SpaceSpec("A", math.inf, 0.7), rule).value
        h_inf = space_norm(f, SpaceSpec("H", math.inf, 0.7), rule).value
        err = abs(a_inf - h_inf) / max(a_inf, 1e-300)
        cases.append(CaseResult(f"supnorm-identity-{i}", a_inf, h_inf,
                                tol, err <= tol, {}))
    for q, alpha in ((1.0, 0.5), (2.0, 1.0)):
        f = _random_polynomial(rng, n, 6)
        b_inf = space_norm(f, SpaceSpec("B", math.inf, alpha, q), rule).value
        h_q = space_norm(f, SpaceSpec("H", q, alpha), rule).value
        err = abs(b_inf - h_q) / max(h_q, 1e-300)
        cases.append(CaseResult(f"mixed-sup-identity-q{q}", b_inf, h_q, tol,
                                err <= tol, {}))
    # monotone inclusion of the mixed family in the radial exponent
    ratios = []
    for i in range(cfg.par("samples", 4)):
        f = _random_polynomial(rng, n, 8)
        n0 = space_norm(f, SpaceSpec("B", 1.0, 0.75, 1.0), rule).value
        n1 = space_norm(f, SpaceSpec("B", 2.0, 0.75, 1.0), rule).value
        ratios.append(n1 / n0)
    bounded = max(ratios) <= cfg.par("inclusion_constant", 10.0)
    cases.append(CaseResult("mixed-inclusion", max(ratios), None, None,
                            bounded, {"ratios": [float(v) for v in ratios]}))
    # quadratic-mean norms against coefficient sums
    for i in range(2):
        f = _random_polynomial(rng, n, 6)
        direct = space_norm(f, SpaceSpec("A", 2.0, 0.5), rule).value
        acc = 0.0
        for k in range(f.max_degree + 1):
            w = _radial_moment(2 * k + n - 1, 0.5)
            acc += float(np.dot(f.rows[k], f.rows[k])) * w
        err = abs(direct - math.sqrt(acc)) / max(math.sqrt(acc), 1e-300)
        cases.append(CaseResult(f"parseval-{i}", direct, math.sqrt(acc),
                                1e-8, err <= 1e-8, {}))
    return VerificationReport("space-identities", _cfg_echo(cfg), cases)


def _radial_moment(power: float, alpha: float) -> float:
    """int_0^1 r^power (1-r)^alpha dr by the beta-function closed form."""
    return math.exp(gammaln(power + 1) + gammaln(alpha + 1)
                    - gammaln(power + alpha + 2))


# ---------------------------------------------------------------------------
# registry


def _cfg_echo(cfg: SuiteConfig) -> dict:
    return {"suite": cfg.suite, "n": cfg.n, "seed": cfg.seed,
            "tier": cfg.tier, "params": dict(cfg.params),
            "tolerances": dict(cfg.tolerances)}


@dataclass(frozen=True)
class Suite:
    name: str
    statement: str
    runner: object
    required: tuple = ()


SUITES = {
    "gamma-exact": Suite(
        "gamma-exact",
        "weighted radial quadrature reproduces the exact gamma-function value "
        "of int_0^1 (1-r^2)^s r^{2t+n-1} dr",
        _suite_gamma_exact),
    "poisson-consistency": Suite(
        "poisson-consistency",
        "zonal series and closed form of the ball Poisson kernel agree; "
        "zonal kernels equal the basis product sums",
        _suite_poisson_consistency),
    "reproduction-ball": Suite(
        "reproduction-ball",
        "the weighted kernel projection reproduces finite expansions on the "
        "ball",
        _suite_reproduction_ball),
    "reproduction-halfspace": Suite(
        "reproduction-halfspace",
        "the half-space kernel projection reproduces a shifted Poisson "
        "section",
        _suite_reproduction_halfspace),
    "radial-decay": Suite(
        "radial-decay",
        "int_0^1 (1-r)^a (1-rho r)^-lam dr grows like (1-rho)^{a+1-lam}",
        _suite_radial_decay),
    "kernel-volume-decay": Suite(
        "kernel-volume-decay",
        "volume integrals of |Q_beta|^{gamma/(n+beta)} against (1-|y|)^delta "
        "grow like (1-|x|)^{delta-gamma+n}",
        _suite_kernel_volume_decay),
    "kernel-halfspace-decay": Suite(
        "kernel-halfspace-decay",
        "half-space kernel volume integrals grow like t^{delta-gamma+n+1}",
        _suite_kernel_halfspace_decay),
    "kernel-sphere-mean": Suite(
        "kernel-sphere-mean",
        "sphere means of |Q_beta| grow like (1-r rho)^{-(1+beta)}",
        _suite_kernel_sphere_mean),
    "kernel-norm-growth": Suite(
        "kernel-norm-growth",
        "six norms of the kernel sections f_{m,y} grow with the predicted "
        "powers of 1-|y|",
        _suite_kernel_norm_growth),
    "increasing-weight-inequality": Suite(
        "increasing-weight-inequality",
        "the q-th power of a weighted integral of an increasing function is "
        "dominated by the weighted integral of its q-th power",
        _suite_increasing_weight_inequality),
    "pairing-identity": Suite(
        "pairing-identity",
        "the sphere pairing of a Poisson convolution equals its coefficient "
        "series and its fractional-derivative double integral",
        _suite_pairing_identity),
    "multiplier-mixed-to-mixed": Suite(
        "multiplier-mixed-to-mixed",
        "multipliers between mixed-norm spaces (radial exponent > 1) are "
        "characterized by the weighted sup functional N_1",
        _suite_multiplier("mixed-to-mixed")),
    "multiplier-mixed-to-mixed-small": Suite(
        "multiplier-mixed-to-mixed-small",
        "the mixed-to-mixed characterization in the quasi-norm range "
        "(radial exponent <= 1)",
        _suite_multiplier("mixed-to-mixed-small")),
    "multiplier-mixed-to-radial-sup": Suite(
        "multiplier-mixed-to-radial-sup",
        "multipliers from the quasi-norm mixed space into the radial-sup "
        "family are characterized by N_s",
        _suite_multiplier("mixed-to-radial-sup")),
    "multiplier-hardy-to-hardy": Suite(
        "multiplier-hardy-to-hardy",
        "multipliers between the radial-sup (Hardy-type) spaces are "
        "characterized by N_p",
        _suite_multiplier("hardy-to-hardy")),
    "young-convolution": Suite(
        "young-convolution",
        "the convolution bound ||c*f|| <= C ||g|| ||f|| under dual exponents "
        "and additive weights",
        _suite_young),
    "distance-ball": Suite(
        "distance-ball",
        "the constructive two-piece decomposition: small-piece sup norm "
        "scales linearly in the threshold and the sublevel piece obeys the "
        "kernel-integral bound",
        _suite_distance_ball),
    "distance-halfspace": Suite(
        "distance-halfspace",
        "the half-space sublevel kernel integral: verdict stability under "
        "domain doubling and threshold monotonicity",
        _suite_distance_halfspace),
    "embedding-bound": Suite(
        "embedding-bound",
        "volume-space membership bounds pointwise growth; ratios stay "
        "bounded along boundary-concentrating kernel sections",
        _suite_embedding),
    "space-identities": Suite(
        "space-identities",
        "value identities among the sup-norm families and the monotone "
        "inclusion of mixed spaces in the radial exponent",
        _suite_space_identities),
}


def make_config(suite: str, n: int | None = None, seed: int | None = None,
                tier: str = "desk", params: dict | None = None,
                tolerances: dict | None = None) -> SuiteConfig:
    if suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}; see list for the catalog")
    return SuiteConfig(suite=suite, n=n if n is not None else 2,
                       seed=seed if seed is not None else 20260809,
                       tier=tier, params=params or {},
                       tolerances=tolerances or {})


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Dispatch a configuration to its suite; deterministic per config."""
    if cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}")
    if cfg.tier not in ("desk", "heavy"):
        raise ConfigError("tier must be 'desk' or 'heavy'")
    return SUITES[cfg.suite].runner(cfg)


def list_suites() -> list:
    """Catalog rows: (name, statement)."""
    return [(s.name, s.statement) for s in SUITES.values()]
