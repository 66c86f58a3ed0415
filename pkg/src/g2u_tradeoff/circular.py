"""GT/UAV energy trade-off when the UAV circles the GT at constant radius and speed."""
from __future__ import annotations

import math

from . import propulsion as prop
from .channel import LN2, circular_throughput
from .errors import (
    EmptyFeasibleSetError,
    InfeasibleEnergyError,
    InfeasiblePointError,
    InfeasiblePowerError,
    PowerOutOfRangeError,
    UnboundedTimeError,
)
from .params import SystemParams, min_level_power
from .points import FEAS_RTOL, CircularDesign, EnergyPoint, ParetoCurve, check_lemma1, e2_grid
from .scalar_opt import SearchSpec, bisect_monotone, minimize_1d

# Radius beyond which a circle is treated as level flight; caps the open end of the T interval.
R_CAP = 1e6


def _point(params: SystemParams, T: float, r: float, p1: float) -> EnergyPoint:
    design = CircularDesign(T=T, r=r, V=float(prop.optimal_circular_speed(r, params)), p1=p1)
    q = circular_throughput(params, T, p1, r)
    check_lemma1(q, params.Q)
    return EnergyPoint(
        E1=T * (p1 + params.Pc),
        E2=T * float(prop.min_circular_power(r, params)),
        design=design,
        throughput=q,
    )


def _time_for(params: SystemParams, p1: float, r: float) -> float:
    # T delivering exactly Q bits
    snr = p1 * params.gamma0 / (params.H ** 2 + r * r)
    return params.Q * LN2 / (params.B * math.log1p(snr))


def gt_min_energy(params: SystemParams) -> EnergyPoint:
    """Extreme point (E1min, E2max): hover on the smallest circle, energy-efficient p1."""
    if params.Pc == 0:
        raise UnboundedTimeError("with zero circuit power the GT optimum is p1 -> 0 and T -> infinity")
    r = prop.min_radius(params)
    a = params.gamma0 / (params.H ** 2 + r * r)

    # Sign of d/dp [(p + Pc) / ln(1 + a p)]; increasing in p, negative at p = 0.
    def stationarity(p: float) -> float:
        return math.log1p(a * p) - a * (p + params.Pc) / (1.0 + a * p)

    if stationarity(params.P1max) > 0:
        p1 = bisect_monotone(stationarity, 0.0, SearchSpec(0.0, params.P1max, atol=1e-300))
    else:
        # no interior stationary point
        def e1(p: float) -> float:
            return (p + params.Pc) / math.log1p(a * p) if p > 0 else math.inf

        p1, _ = minimize_1d(e1, SearchSpec(0.0, params.P1max))
    return _point(params, _time_for(params, p1, r), r, p1)


def uav_min_energy(params: SystemParams, n_grid: int = 512) -> EnergyPoint:
    """Extreme point (E1max, E2min): full GT power, radius chosen by 1-D search."""
    r_min = prop.min_radius(params)
    p1 = params.P1max

    def e2(log_r: float) -> float:
        r = math.exp(log_r)
        return float(prop.min_circular_power(r, params)) * _time_for(params, p1, r)

    lo = math.log(r_min)
    log_r, _ = minimize_1d(e2, SearchSpec(lo, max(math.log(R_CAP), lo + 1.0), n_grid=n_grid))
    r = max(math.exp(log_r), r_min)
    return _point(params, _time_for(params, p1, r), r, p1)


def radius_from_energy(E2: float, T: float, params: SystemParams) -> float:
    """Radius r with ``T * min_circular_power(r) = E2``."""
    P = E2 / T
    if P > params.P2max * (1.0 + FEAS_RTOL):
        raise PowerOutOfRangeError(f"E2/T = {P!r} W exceeds P2max = {params.P2max!r} W")
    try:
        r = prop.radius_for_power(P, params)
    except InfeasiblePowerError:
        raise PowerOutOfRangeError(
            f"E2/T = {P!r} W not above level-flight power {min_level_power(params)!r} W"
        ) from None
    return max(r, prop.min_radius(params))


def _p1_for(E2: float, T: float, params: SystemParams) -> float:
    r = radius_from_energy(E2, T, params)
    return (params.H ** 2 + r * r) / params.gamma0 * math.expm1(params.Q * LN2 / (params.B * T))


def power_from_energy(E2: float, T: float, params: SystemParams, enforce_cap: bool = True) -> float:
    """GT power needed to deliver Q bits in time T on the circle fixed by (E2, T)."""
    p1 = _p1_for(E2, T, params)
    if enforce_cap and p1 > params.P1max * (1.0 + FEAS_RTOL):
        raise InfeasiblePointError(f"needs p1 = {p1!r} W > P1max = {params.P1max!r} W")
    return p1


def e1_closed_form(E2: float, T: float, params: SystemParams, enforce_cap: bool = True) -> float:
    return T * (power_from_energy(E2, T, params, enforce_cap) + params.Pc)


def time_interval(E2: float, params: SystemParams) -> tuple[float, float]:
    """Search interval for T: from E2/P2max up to the level-flight cap radius."""
    return E2 / params.P2max, E2 / float(prop.min_circular_power(R_CAP, params))


def pareto_point(E2: float, params: SystemParams, n_grid: int = 256) -> EnergyPoint:
    """Minimum GT energy for the given UAV energy, optimizing the mission time T.

    T is searched on a log scale. The set of T with p1 <= P1max is located
    first (p1 is minimized over T, then the two crossings of the cap are
    bisected) so that narrow feasible windows near E2min are not missed.
    """
    if not E2 > 0:
        raise InfeasibleEnergyError(f"E2 must be > 0, got {E2!r}")
    T_lo, T_hi = time_interval(E2, params)
    u_lo, u_hi = math.log(T_lo), math.log(T_hi)
    cap = params.P1max

    def p1_of(u: float) -> float:
        try:
            return _p1_for(E2, math.exp(u), params)
        except PowerOutOfRangeError:
            return math.inf

    try:
        u_p, p_min = minimize_1d(p1_of, SearchSpec(u_lo, u_hi, n_grid=n_grid))
    except EmptyFeasibleSetError:
        raise InfeasibleEnergyError(f"E2 = {E2!r} J admits no valid circle") from None
    if p_min > cap * (1.0 + FEAS_RTOL):
        raise InfeasibleEnergyError(
            f"E2 = {E2!r} J needs p1 >= {p_min!r} W > P1max = {cap!r} W for every T"
        )

    tight = SearchSpec(0.0, 1.0, rtol=1e-12, atol=1e-300)
    if p1_of(u_lo) <= cap or u_p <= u_lo:
        u_a = u_lo
    else:
        u_a = bisect_monotone(lambda u: -p1_of(u), -cap, _with_bounds(tight, u_lo, u_p))
    if p1_of(u_hi) <= cap or u_p >= u_hi:
        u_b = u_hi
    else:
        u_b = bisect_monotone(p1_of, cap, _with_bounds(tight, u_p, u_hi))

    def e1_of(u: float) -> float:
        p1 = p1_of(u)
        if p1 > cap * (1.0 + FEAS_RTOL):
            return math.inf
        return math.exp(u) * (p1 + params.Pc)

    if u_b > u_a:
        u_best, _ = minimize_1d(e1_of, SearchSpec(u_a, u_b, n_grid=n_grid))
    else:
        u_best = u_p
    T = math.exp(u_best)
    r = radius_from_energy(E2, T, params)
    return _point(params, T, r, p1_of(u_best))


def _with_bounds(spec: SearchSpec, lo: float, hi: float) -> SearchSpec:
    return SearchSpec(lo, hi, spec.n_grid, spec.rtol, spec.atol, spec.max_iter)


def pareto_curve(params: SystemParams, n: int = 64) -> ParetoCurve:
    """Pareto boundary sampled at ``n`` geometrically spaced E2 values.

    The two ends are the extreme points themselves; infeasible interior
    samples are dropped and noted in ``warnings``.
    """
    low = uav_min_energy(params)
    high = gt_min_energy(params)
    grid = e2_grid(low.E2, high.E2, n)
    points = [low]
    warnings = []
    for E2 in grid[1:-1]:
        try:
            points.append(pareto_point(E2, params))
        except (InfeasibleEnergyError, InfeasiblePointError) as exc:
            warnings.append(f"E2={E2:.10g} J skipped: {exc}")
    points.append(high)
    return ParetoCurve(points=tuple(points), trajectory_kind="circular", params=params, warnings=tuple(warnings))
