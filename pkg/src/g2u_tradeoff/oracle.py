"""Independent numerical validators for the closed-form solvers.

Nothing here calls the formulas being checked. The throughput oracle integrates
the instantaneous rate along the actual flight path; the Pareto oracles
brute-force a dense grid, using only rate/propulsion primitives and G_inverse.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import propulsion as prop
from .channel import LN2, RateContext, G_inverse, antiderivative_F, spectral_rate
from .errors import InfeasibleEnergyError, ToleranceNotMetError, UnreachableTargetError
from .geometry import StraightGeometry
from .params import SystemParams
from .points import FEAS_RTOL

SEED = 42
R_CAP = 1e6
ENERGY_BAND_RTOL = 1e-3


@dataclass(frozen=True)
class QuadSpec:
    abs_tol: float = 1e-6
    rel_tol: float = 1e-11
    max_depth: int = 50

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be > 0")
        if self.max_depth < 10:
            raise ValueError("max_depth must be >= 10")


def adaptive_simpson(f, a: float, b: float, spec: QuadSpec = QuadSpec()) -> float:
    """Adaptive Simpson rule with Richardson-corrected panel estimates."""
    if a == b:
        return 0.0
    # coarse pass to turn the relative tolerance into an absolute one
    n0 = 16
    xs = np.linspace(a, b, 2 * n0 + 1)
    ys = [f(float(x)) for x in xs]
    h = (b - a) / (2 * n0)
    coarse = h / 3.0 * (ys[0] + ys[-1] + 4.0 * sum(ys[1:-1:2]) + 2.0 * sum(ys[2:-1:2]))
    tol = max(spec.abs_tol, spec.rel_tol * abs(coarse)) / n0

    total = 0.0
    for k in range(n0):
        x0, x2 = float(xs[2 * k]), float(xs[2 * k + 2])
        y0, y1, y2 = ys[2 * k], ys[2 * k + 1], ys[2 * k + 2]
        whole = (x2 - x0) / 6.0 * (y0 + 4.0 * y1 + y2)
        stack = [(x0, x2, y0, y1, y2, whole, tol, 0)]
        while stack:
            lo, hi, flo, fmid, fhi, est, eps, depth = stack.pop()
            mid = 0.5 * (lo + hi)
            ql, qr = 0.5 * (lo + mid), 0.5 * (mid + hi)
            fql, fqr = f(ql), f(qr)
            left = (mid - lo) / 6.0 * (flo + 4.0 * fql + fmid)
            right = (hi - mid) / 6.0 * (fmid + 4.0 * fqr + fhi)
            diff = left + right - est
            if abs(diff) <= 15.0 * eps:
                total += left + right + diff / 15.0
            elif depth >= spec.max_depth:
                raise ToleranceNotMetError(f"quadrature did not converge on [{lo}, {hi}]")
            else:
                stack.append((lo, mid, flo, fql, fmid, left, 0.5 * eps, depth + 1))
                stack.append((mid, hi, fmid, fqr, fhi, right, 0.5 * eps, depth + 1))
    return total


def quad_straight_throughput(
    p1: float,
    V: float,
    geom: StraightGeometry,
    params: SystemParams,
    spec: QuadSpec = QuadSpec(),
    t_range: tuple[float, float] | None = None,
) -> float:
    """Bits delivered along ``q(t) = qA + t V dhat`` by direct quadrature of the rate."""
    if not V > 0:
        raise ValueError(f"speed must be > 0, got {V}")
    if p1 == 0:
        return 0.0
    ctx = RateContext(p1=p1, gamma0=params.gamma0, B=params.B, effective_height_sq=params.H ** 2)
    (ax, ay), (dx, dy) = geom.qA, geom.dhat

    def rate(t: float) -> float:
        x, y = ax + t * V * dx, ay + t * V * dy
        return float(spectral_rate(ctx, x * x + y * y))

    t0, t1 = t_range if t_range is not None else (0.0, geom.D / V)
    return adaptive_simpson(rate, t0, t1, spec)


def _bisect_decreasing(fn, target, lo, hi, iters=200):
    """Vectorized bisection for decreasing ``fn`` on [lo, hi] (elementwise)."""
    lo = np.broadcast_to(np.asarray(lo, dtype=float), np.shape(target)).copy()
    hi = np.broadcast_to(np.asarray(hi, dtype=float), np.shape(target)).copy()
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        above = fn(mid) > target
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    return 0.5 * (lo + hi)


def brute_pareto_circular(E2: float, params: SystemParams, grid_n: int = 4096) -> float:
    """Minimum GT energy at UAV energy E2 over a log-spaced grid of mission times.

    The supremum of the time interval (level flight) is excluded. For each T
    the circle radius and GT power are found by bisection on the propulsion
    and rate primitives. Refining with ``2*grid_n`` reuses every grid point.
    """
    if grid_n < 256:
        raise ValueError("grid_n must be >= 256")
    if not E2 > 0:
        raise InfeasibleEnergyError(f"E2 must be > 0, got {E2!r}")
    T_lo = E2 / params.P2max
    T_hi = E2 / float(prop.min_circular_power(R_CAP, params))
    T = T_lo * (T_hi / T_lo) ** (np.arange(grid_n) / grid_n)
    P = E2 / T

    # radius: min_circular_power is decreasing in r
    log_r = _bisect_decreasing(
        lambda u: prop.min_circular_power(np.exp(u), params), P, math.log(1e-9), math.log(10 * R_CAP)
    )
    r2 = np.exp(2.0 * log_r)
    r2 = np.maximum(r2, prop.min_radius(params) ** 2)

    # GT power: delivered bits increase with p1
    def bits(log_p):
        ctx = RateContext(p1=np.exp(log_p), gamma0=params.gamma0, B=params.B, effective_height_sq=params.H ** 2)
        return T * spectral_rate(ctx, r2)

    log_p = _bisect_decreasing(lambda u: -bits(u), -params.Q, math.log(1e-30), math.log(1e6))
    p1 = np.exp(log_p)
    E1 = T * (p1 + params.Pc)
    E1 = np.where(p1 <= params.P1max * (1.0 + FEAS_RTOL), E1, np.inf)
    best = float(E1.min())
    if math.isinf(best):
        raise InfeasibleEnergyError(f"E2 = {E2!r} J: no grid time with p1 <= P1max")
    return best


def _straight_e1(V: float, geom: StraightGeometry, params: SystemParams) -> float:
    if prop.straight_power(V, params) > params.P2max * (1.0 + FEAS_RTOL):
        return math.inf
    try:
        p1 = G_inverse(params.Q * V * LN2 / params.B, geom, params)
    except UnreachableTargetError:
        return math.inf
    if p1 > params.P1max * (1.0 + FEAS_RTOL):
        return math.inf
    return geom.D / V * (p1 + params.Pc)


def brute_pareto_straight(E2: float, geom: StraightGeometry, params: SystemParams, grid_n: int = 4096) -> float:
    """Minimum GT energy at UAV energy E2 over a speed grid covering both regimes.

    The grid spans every speed that could spend E2 on the leg. In each cell
    where the leg-energy residual changes sign the crossing speed is located
    by linear interpolation, and kept if its leg energy is within 0.1% of E2.
    With no sign change (E2 at the leg minimum) the in-band grid speed
    closest to E2 is used.
    """
    if grid_n < 256:
        raise ValueError("grid_n must be >= 256")
    D = geom.D
    V_lo = math.sqrt(D * params.c2 / E2)
    V_hi = math.sqrt(E2 / (D * params.c1))
    if not V_hi > V_lo:
        V_lo, V_hi = min(V_lo, V_hi) * 0.99, max(V_lo, V_hi) * 1.01
    V = np.geomspace(V_lo, V_hi, grid_n)
    resid = prop.straight_leg_energy(V, D, params) - E2
    in_band = np.abs(resid) <= ENERGY_BAND_RTOL * E2

    speeds = [float(v) for v in V[resid == 0.0]]
    for i in np.flatnonzero(resid[:-1] * resid[1:] < 0.0):
        a, b = resid[i], resid[i + 1]
        v = float(V[i] + (V[i + 1] - V[i]) * a / (a - b))
        if abs(prop.straight_leg_energy(v, D, params) - E2) <= ENERGY_BAND_RTOL * E2:
            speeds.append(v)
    if not speeds and in_band.any():
        idx = np.flatnonzero(in_band)
        speeds.append(float(V[idx[np.argmin(np.abs(resid[idx]))]]))

    best = min((_straight_e1(v, geom, params) for v in speeds), default=math.inf)
    if math.isinf(best):
        raise InfeasibleEnergyError(f"E2 = {E2!r} J: no feasible grid speed")
    return best


def fd_check_F(
    params: SystemParams,
    geom: StraightGeometry,
    samples: int = 1000,
    *,
    p1_range: tuple[float, float] | None = None,
    h_rel: float = 1e-4,
    seed: int = SEED,
) -> float:
    """Worst relative gap between a central difference of F and its integrand.

    z is drawn uniformly over the leg's along-track span and p1 log-uniformly
    over ``p1_range`` (default ``[1e-6, P1max]``); step ``h = h_rel*max(1, |z|)``.
    """
    if samples < 100:
        raise ValueError("samples must be >= 100")
    lo, hi = p1_range if p1_range is not None else (1e-6, params.P1max)
    rng = np.random.default_rng(seed)
    zs = rng.uniform(geom.c3, geom.c3 + geom.D, samples)
    if lo == hi:
        ps = np.full(samples, float(lo))
    else:
        ps = np.exp(rng.uniform(math.log(lo), math.log(hi), samples))

    worst = 0.0
    for z, p in zip(zs.tolist(), ps.tolist()):
        h = h_rel * max(1.0, abs(z))
        fd = (
            antiderivative_F(z + h, p, params.gamma0, geom.Hbar_sq)
            - antiderivative_F(z - h, p, params.gamma0, geom.Hbar_sq)
        ) / (2.0 * h)
        exact = math.log1p(p * params.gamma0 / (geom.Hbar_sq + z * z))
        if exact == 0.0:
            err = abs(fd)
        else:
            err = abs(fd - exact) / exact
        worst = max(worst, err)
    return worst
