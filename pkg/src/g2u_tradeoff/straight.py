"""GT/UAV energy trade-off for a constant-speed straight leg from qA to qB."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import propulsion as prop
from .channel import LN2, G, G_inverse, straight_throughput
from .errors import (
    BelowMinimumEnergyError,
    EmptyFeasibleSetError,
    InfeasibleEnergyError,
    UnreachableTargetError,
)
from .geometry import StraightGeometry, make_geometry
from .params import SystemParams
from .points import FEAS_RTOL, Branch, EnergyPoint, ParetoCurve, StraightDesign, check_lemma1, e2_grid
from .scalar_opt import SearchSpec, minimize_1d

__all__ = [
    "BranchCandidate",
    "branch_candidates",
    "gt_min_energy",
    "make_geometry",
    "pareto_curve",
    "pareto_point",
    "speeds_from_energy",
    "uav_min_energy",
]

# p1 search range for the extreme points, in decades below P1max
P1_SEARCH_DECADES = 12
TIE_RTOL = 1e-12


def _speed_for_power(p1: float, geom: StraightGeometry, params: SystemParams) -> float:
    # speed at which exactly Q bits are delivered over the leg
    return params.B * G(p1, geom, params) / (params.Q * LN2)


def _power_ok(V: float, params: SystemParams) -> bool:
    return prop.straight_power(V, params) <= params.P2max * (1.0 + FEAS_RTOL)


def _point(geom: StraightGeometry, params: SystemParams, V: float, p1: float, branch: Branch) -> EnergyPoint:
    q = straight_throughput(p1, V, geom, params)
    check_lemma1(q, params.Q)
    T = geom.D / V
    return EnergyPoint(
        E1=T * (p1 + params.Pc),
        E2=float(prop.straight_leg_energy(V, geom.D, params)),
        design=StraightDesign(V=V, p1=p1, branch=branch, T=T),
        throughput=q,
    )


def _branch_of(V: float, params: SystemParams) -> Branch:
    # within search precision of the double root both roots coincide; ties go slow
    v_star = prop.energy_optimal_speed(params)
    return Branch.FAST if V > v_star * (1.0 + 1e-6) else Branch.SLOW


def _extreme(objective, geom: StraightGeometry, params: SystemParams, n_grid: int) -> EnergyPoint:
    def f(log_p: float) -> float:
        p1 = math.exp(log_p)
        V = _speed_for_power(p1, geom, params)
        if not (V > 0 and _power_ok(V, params)):
            return math.inf
        return objective(p1, V)

    hi = math.log(params.P1max)
    spec = SearchSpec(hi - P1_SEARCH_DECADES * math.log(10.0), hi, n_grid=n_grid)
    try:
        log_p, _ = minimize_1d(f, spec)
    except EmptyFeasibleSetError:
        raise EmptyFeasibleSetError(
            "no p1 <= P1max gives a speed within the UAV power cap"
        ) from None
    p1 = min(math.exp(log_p), params.P1max)
    V = _speed_for_power(p1, geom, params)
    return _point(geom, params, V, p1, _branch_of(V, params))


def gt_min_energy(geom: StraightGeometry, params: SystemParams, n_grid: int = 512) -> EnergyPoint:
    """Extreme point (E1min, E2max) by 1-D search over p1."""
    return _extreme(lambda p1, V: geom.D / V * (p1 + params.Pc), geom, params, n_grid)


def uav_min_energy(geom: StraightGeometry, params: SystemParams, n_grid: int = 512) -> EnergyPoint:
    """Extreme point (E1max, E2min) by 1-D search over p1."""
    return _extreme(lambda p1, V: prop.straight_leg_energy(V, geom.D, params), geom, params, n_grid)


def speeds_from_energy(E2: float, geom: StraightGeometry, params: SystemParams) -> tuple[float, float]:
    """The two speeds (fast V1 >= slow V2) whose leg energy equals E2."""
    D, c1, c2 = geom.D, params.c1, params.c2
    floor = prop.min_leg_energy(D, params)
    if E2 < floor * (1.0 - 1e-12):
        raise BelowMinimumEnergyError(f"E2 = {E2!r} J below the leg minimum 2D*sqrt(c1*c2) = {floor!r} J")
    s = math.sqrt(max(0.0, E2 * E2 - 4.0 * c1 * c2 * D * D))
    V1 = math.sqrt((E2 + s) / (2.0 * D * c1))
    # slow root via the product of roots, avoids E2 - s cancellation
    V2 = math.sqrt(2.0 * c2 * D / (E2 + s))
    return V1, V2


@dataclass(frozen=True)
class BranchCandidate:
    branch: Branch
    V: float
    p1: float
    E1: float
    feasible: bool


def branch_candidates(E2: float, geom: StraightGeometry, params: SystemParams) -> tuple[BranchCandidate, BranchCandidate]:
    """Both speed roots for E2 with their GT power and energy (fast first)."""
    out = []
    for branch, V in zip((Branch.FAST, Branch.SLOW), speeds_from_energy(E2, geom, params)):
        try:
            p1 = G_inverse(params.Q * V * LN2 / params.B, geom, params)
        except UnreachableTargetError:
            p1 = math.inf
        feasible = p1 <= params.P1max * (1.0 + FEAS_RTOL) and _power_ok(V, params)
        out.append(BranchCandidate(branch, V, p1, geom.D / V * (p1 + params.Pc), feasible))
    return out[0], out[1]


def pareto_point(E2: float, geom: StraightGeometry, params: SystemParams) -> EnergyPoint:
    """Pick the feasible speed root with the smaller GT energy (ties go to the slow root)."""
    fast, slow = branch_candidates(E2, geom, params)
    feasible = [c for c in (fast, slow) if c.feasible]
    if not feasible:
        raise InfeasibleEnergyError(f"E2 = {E2!r} J: neither speed root satisfies the power caps")
    if len(feasible) == 2:
        if abs(fast.E1 - slow.E1) < TIE_RTOL * min(fast.E1, slow.E1):
            best = slow
        else:
            best = fast if fast.E1 < slow.E1 else slow
    else:
        best = feasible[0]
    return _point(geom, params, best.V, best.p1, best.branch)


def pareto_curve(geom: StraightGeometry, params: SystemParams, n: int = 64) -> ParetoCurve:
    """Pareto boundary over ``n`` geometrically spaced E2 values (extremes at the ends)."""
    low = uav_min_energy(geom, params)
    high = gt_min_energy(geom, params)
    grid = e2_grid(low.E2, high.E2, n)
    points = [low]
    warnings = []
    for E2 in grid[1:-1]:
        try:
            points.append(pareto_point(E2, geom, params))
        except (InfeasibleEnergyError, BelowMinimumEnergyError) as exc:
            warnings.append(f"E2={E2:.10g} J skipped: {exc}")
    points.append(high)
    return ParetoCurve(points=tuple(points), trajectory_kind="straight", params=params, warnings=tuple(warnings))
