"""Acceptance gate: one test and one PASS/FAIL line per criterion.

Criteria 6-8 check the qualitative shape of the trade-off curves on the
``reference`` preset (gamma0 = 1e6); everything else runs on ``nominal``
(gamma0 = 1e9). Run with ``pytest tests/test_acceptance.py -v``; the lines are
repeated in an "acceptance criteria" section of the terminal summary.
"""
import math
import time

import numpy as np
import pytest

from g2u_tradeoff import circular, oracle, straight
from g2u_tradeoff import propulsion as prop
from g2u_tradeoff.channel import circular_throughput, straight_throughput
from g2u_tradeoff.geometry import geometry_from_params
from g2u_tradeoff.params import builtin_config
from g2u_tradeoff.points import LEMMA1_RTOL, CircularDesign

SEED = oracle.SEED
SHAPE_PRESET = "reference"


@pytest.fixture(scope="module")
def shape_params():
    return builtin_config(SHAPE_PRESET)


@pytest.fixture(scope="module")
def shape_geom(shape_params):
    return geometry_from_params(shape_params)


@pytest.fixture(scope="module")
def straight_curves(shape_params, shape_geom):
    return {
        Q: straight.pareto_curve(shape_geom, shape_params.replace(Pc=0.05, Q=Q), 64)
        for Q in (30e6, 100e6)
    }


@pytest.fixture(scope="module")
def circular_curves(shape_params):
    return {pc: circular.pareto_curve(shape_params.replace(Pc=pc, Q=600e6), 64) for pc in (0.01, 0.05)}


def test_closed_form_throughput_matches_quadrature(nominal, geom, report):
    rng = np.random.default_rng(SEED)
    p1 = np.exp(rng.uniform(math.log(1e-6), math.log(0.5), 200))
    V = rng.uniform(5.0, 100.0, 200)
    t0 = time.perf_counter()
    worst = 0.0
    for p, v in zip(p1.tolist(), V.tolist()):
        a = straight_throughput(p, v, geom, nominal)
        b = oracle.quad_straight_throughput(p, v, geom, nominal)
        worst = max(worst, abs(a - b) / b)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-7 and elapsed < 5.0
    report("[1] closed-form vs quadrature throughput", ok, f"max rel err {worst:.2e} (<=1e-7), {elapsed:.2f} s (<5 s)")
    assert ok


def test_antiderivative_central_difference(nominal, geom, report):
    t0 = time.perf_counter()
    worst = oracle.fd_check_F(nominal, geom, samples=1000)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-6 and elapsed < 1.0
    report("[2] antiderivative finite-difference check", ok, f"max rel err {worst:.2e} (<=1e-6), {elapsed:.3f} s (<1 s)")
    assert ok


def test_circular_power_identities(nominal, report):
    r = np.geomspace(1.0, 1e6, 601)
    direct = prop.circular_power(r, prop.optimal_circular_speed(r, nominal), nominal)
    worst_id = float(np.max(np.abs(prop.min_circular_power(r, nominal) - direct) / direct))
    worst_cap = 0.0
    for P2 in (200.0, 500.0, 1500.0):
        p = nominal.replace(P2max=P2)
        worst_cap = max(worst_cap, abs(prop.min_circular_power(prop.min_radius(p), p) - P2) / P2)
    ok = worst_id <= 1e-12 and worst_cap <= 1e-9
    report(
        "[3] circular power identities",
        ok,
        f"optimal-speed identity {worst_id:.2e} (<=1e-12), power at r_min {worst_cap:.2e} (<=1e-9)",
    )
    assert ok


def test_speed_roots(nominal, geom, report):
    rng = np.random.default_rng(SEED)
    floor = prop.min_leg_energy(geom.D, nominal)
    E2s = floor * 10.0 ** rng.uniform(0.0, 3.0, 100)
    worst_e = worst_p = 0.0
    for E2 in E2s.tolist():
        V1, V2 = straight.speeds_from_energy(E2, geom, nominal)
        for V in (V1, V2):
            worst_e = max(worst_e, abs(prop.straight_leg_energy(V, geom.D, nominal) - E2) / E2)
        ratio = nominal.c2 / nominal.c1
        worst_p = max(worst_p, abs((V1 * V2) ** 2 - ratio) / ratio)
    ok = worst_e <= 1e-9 and worst_p <= 1e-9
    report("[4] speed-root round trips", ok, f"energy {worst_e:.2e}, product {worst_p:.2e} (both <=1e-9)")
    assert ok


def test_pareto_points_match_brute_force(nominal, geom, report):
    t0 = time.perf_counter()
    circ = nominal.replace(Pc=0.01, Q=600e6)
    lo, hi = circular.uav_min_energy(circ).E2, circular.gt_min_energy(circ).E2
    worst_c = 0.0
    for E2 in np.geomspace(lo, hi, 18)[1:-1].tolist():
        a = circular.pareto_point(E2, circ).E1
        b = oracle.brute_pareto_circular(E2, circ)
        worst_c = max(worst_c, abs(a - b) / b)

    worst_s = 0.0
    for Q in (30e6, 100e6):
        lin = nominal.replace(Pc=0.05, Q=Q)
        lo, hi = straight.uav_min_energy(geom, lin).E2, straight.gt_min_energy(geom, lin).E2
        for E2 in np.geomspace(lo, hi, 10)[1:-1].tolist():
            a = straight.pareto_point(E2, geom, lin).E1
            b = oracle.brute_pareto_straight(E2, geom, lin)
            worst_s = max(worst_s, abs(a - b) / b)
    elapsed = time.perf_counter() - t0
    ok = worst_c <= 1e-4 and worst_s <= 1e-4 and elapsed < 30.0
    report(
        "[5] Pareto points vs brute-force grids",
        ok,
        f"circular {worst_c:.2e}, straight {worst_s:.2e} (both <=1e-4, 16 E2 each), {elapsed:.1f} s (<30 s)",
    )
    assert ok


def test_circular_tradeoff_ratio_and_circuit_power_ordering(shape_params, circular_curves, report):
    low_pc = shape_params.replace(Pc=0.01, Q=600e6)
    high_pc = shape_params.replace(Pc=0.05, Q=600e6)
    ratio = circular.pareto_point(18e3, low_pc).E1 / circular.pareto_point(40e3, low_pc).E1
    c50 = circular_curves[0.05]
    shared = np.geomspace(max(circular_curves[0.01].E2[0], c50.E2[0]), c50.E2[-1], 64).tolist()
    violations = sum(
        circular.pareto_point(E2, low_pc).E1 > circular.pareto_point(E2, high_pc).E1 * (1 + 1e-12)
        for E2 in shared
    )
    ok = 2.5 <= ratio <= 5.0 and violations == 0
    report(
        "[6] circular trade-off reduction and Pc ordering",
        ok,
        f"E1(18 kJ)/E1(40 kJ) = {ratio:.3f} (in [2.5, 5]), Pc=10 mW above 50 mW at {violations}/64 shared E2",
    )
    assert ok


def test_straight_branch_selection(straight_curves, report):
    fast30 = np.mean([pt.design.branch.value == "fast" for pt in straight_curves[30e6]])
    slow100 = np.mean([pt.design.branch.value == "slow" for pt in straight_curves[100e6]])
    ok = fast30 >= 0.9 and slow100 >= 0.9
    report(
        "[7] straight branch selection",
        ok,
        f"Q=30 Mb fast at {fast30:.1%}, Q=100 Mb slow at {slow100:.1%} (both >=90%)",
    )
    assert ok


def test_straight_transmit_power_levels(shape_params, shape_geom, straight_curves, report):
    Pc = 0.05
    worst_rt = 0.0
    for Q, curve in straight_curves.items():
        params = shape_params.replace(Pc=Pc, Q=Q)
        for pt in curve:
            d = pt.design
            worst_rt = max(worst_rt, abs(straight_throughput(d.p1, d.V, shape_geom, params) - Q) / Q)
    p30 = np.array([pt.design.p1 for pt in straight_curves[30e6]])
    p100 = np.array([pt.design.p1 for pt in straight_curves[100e6]])
    same_order = bool(np.all((p30 >= 0.1 * Pc) & (p30 <= 10.0 * Pc)))
    share_10x = float(np.mean(p100 >= 10.0 * Pc))
    ok = worst_rt <= 1e-6 and same_order and share_10x > 0.5
    report(
        "[8] straight transmit power levels",
        ok,
        f"round trip {worst_rt:.1e} (<=1e-6); Q=30 Mb p1 in [{p30.min():.3g}, {p30.max():.3g}] W "
        f"within 10x of Pc: {same_order}; Q=100 Mb p1 >= 10 Pc at {share_10x:.0%} of points (>50%), "
        f"max p1 {p100.max():.3g} W, P1max {shape_params.P1max:g} W",
    )
    assert ok


def test_every_point_delivers_exactly_q(nominal, geom, shape_params, shape_geom, circular_curves, straight_curves, report):
    checked = 0
    worst = 0.0

    def verify(pt, params, g):
        nonlocal checked, worst
        d = pt.design
        if isinstance(d, CircularDesign):
            bits = circular_throughput(params, d.T, d.p1, d.r)
        else:
            bits = straight_throughput(d.p1, d.V, g, params)
        worst = max(worst, abs(pt.throughput - params.Q) / params.Q, abs(bits - params.Q) / params.Q)
        checked += 1

    for curve in list(circular_curves.values()) + list(straight_curves.values()):
        for pt in curve:
            verify(pt, curve.params, shape_geom)
    for pc in (0.01, 0.05):
        params = nominal.replace(Pc=pc)
        for pt in circular.pareto_curve(params, 64):
            verify(pt, params, geom)
    for Q in (30e6, 100e6):
        params = nominal.replace(Pc=0.05, Q=Q)
        for pt in straight.pareto_curve(geom, params, 64):
            verify(pt, params, geom)
    ok = worst <= LEMMA1_RTOL
    report("[9] every point delivers Q", ok, f"{checked} points, max rel gap {worst:.2e} (<=1e-6)")
    assert ok


def test_boundaries_are_monotone(nominal, geom, circular_curves, straight_curves, report):
    curves = list(circular_curves.values()) + list(straight_curves.values())
    curves += [circular.pareto_curve(nominal.replace(Pc=pc), 64) for pc in (0.01, 0.05)]
    curves += [straight.pareto_curve(geom, nominal.replace(Pc=0.05, Q=Q), 64) for Q in (30e6, 100e6)]
    violations = 0
    for c in curves:
        assert len(c) == 64
        violations += int(np.sum(np.diff(c.E1) > 0)) + int(np.sum(np.diff(c.E2) <= 0))
    ok = violations == 0
    report("[10] monotone Pareto boundaries", ok, f"{violations} violations over {len(curves)} 64-point sweeps")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
