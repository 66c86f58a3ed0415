"""Command-line front end.

Exit status: 0 ok, 1 numerical failure, 2 config error, 3 infeasible problem,
4 validation failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path
from typing import TextIO

import numpy as np

from . import circular, oracle, straight
from .channel import straight_throughput
from .errors import ConfigError, InfeasibleError, NumericalError
from .geometry import geometry_from_params
from .params import SystemParams, builtin_config, load_config
from .points import EnergyPoint, ParetoCurve

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_VALIDATION = 4

CIRCULAR_COLUMNS = ("E2_J", "E1_J", "T_s", "r_m", "V_mps", "p1_W")
STRAIGHT_COLUMNS = ("E2_J", "E1_J", "V_mps", "p1_W", "branch", "T_s")


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _circular_row(pt: EnergyPoint) -> list[str]:
    d = pt.design
    return [_fmt(pt.E2), _fmt(pt.E1), _fmt(d.T), _fmt(d.r), _fmt(d.V), _fmt(d.p1)]


def _straight_row(pt: EnergyPoint) -> list[str]:
    d = pt.design
    return [_fmt(pt.E2), _fmt(pt.E1), _fmt(d.V), _fmt(d.p1), d.branch.value, _fmt(d.T)]


def write_csv(points, kind: str, comment: str, stream: TextIO) -> None:
    columns, row = (CIRCULAR_COLUMNS, _circular_row) if kind == "circular" else (STRAIGHT_COLUMNS, _straight_row)
    stream.write(f"# {comment}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for pt in sorted(points, key=lambda p: p.E2):
        writer.writerow(row(pt))


def _describe(label: str, pt: EnergyPoint) -> str:
    d = pt.design
    extra = f"r={d.r:.6g} m" if hasattr(d, "r") else f"branch={d.branch.value}"
    return (
        f"{label}: E1={pt.E1:.6g} J  E2={pt.E2:.6g} J  T={d.T:.6g} s  "
        f"V={d.V:.6g} m/s  p1={d.p1:.6g} W  {extra}"
    )


def _load(args) -> SystemParams:
    params = load_config(args.config) if args.config else builtin_config(args.preset)
    changes = {}
    if args.pc is not None:
        changes["Pc"] = args.pc
    if args.q_bits is not None:
        changes["Q"] = args.q_bits
    return params.replace(**changes) if changes else params


def _emit(points, kind: str, comment: str, args, summary: TextIO) -> None:
    if args.out:
        buf = io.StringIO()
        write_csv(points, kind, comment, buf)
        Path(args.out).write_text(buf.getvalue())
        print(f"wrote {len(points)} rows to {args.out}", file=summary)
    else:
        write_csv(points, kind, comment, sys.stdout)


def _curve_comment(curve: ParetoCurve, n: int) -> str:
    units = "J, J, s, m, m/s, W" if curve.trajectory_kind == "circular" else "J, J, m/s, W, -, s"
    return (
        f"{curve.trajectory_kind} Pareto boundary; E2 grid geometric over "
        f"[{_fmt(curve.E2[0])}, {_fmt(curve.E2[-1])}] J with n={n}; units: {units}"
    )


def cmd_extremes(args, kind: str) -> int:
    params = _load(args)
    summary = sys.stdout if args.out else sys.stderr
    if kind == "circular":
        low, high = circular.uav_min_energy(params), circular.gt_min_energy(params)
    else:
        geom = geometry_from_params(params)
        low, high = straight.uav_min_energy(geom, params), straight.gt_min_energy(geom, params)
    print(_describe("UAV-min (E1max, E2min)", low), file=summary)
    print(_describe("GT-min  (E1min, E2max)", high), file=summary)
    _emit([low, high], kind, f"{kind} extreme points", args, summary)
    return EXIT_OK


def cmd_pareto(args, kind: str) -> int:
    if args.points < 2:
        raise ConfigError("--points must be >= 2")
    params = _load(args)
    summary = sys.stdout if args.out else sys.stderr
    if kind == "circular":
        curve = circular.pareto_curve(params, args.points)
    else:
        curve = straight.pareto_curve(geometry_from_params(params), params, args.points)
    print(_describe("UAV-min (E1max, E2min)", curve.points[0]), file=summary)
    print(_describe("GT-min  (E1min, E2max)", curve.points[-1]), file=summary)
    for w in curve.warnings:
        print(f"warning: {w}", file=summary)
    _emit(curve.points, kind, _curve_comment(curve, args.points), args, summary)
    return EXIT_OK


def run_validation(params: SystemParams, stream: TextIO) -> bool:
    """Cross-check closed forms against the oracles; one line per check."""
    results = []
    rng = np.random.default_rng(oracle.SEED)

    circ_lo = circular.uav_min_energy(params).E2
    circ_hi = circular.gt_min_energy(params).E2
    worst = 0.0
    for E2 in np.geomspace(circ_lo, circ_hi, 6)[1:-1]:
        a = circular.pareto_point(float(E2), params).E1
        b = oracle.brute_pareto_circular(float(E2), params)
        worst = max(worst, abs(a - b) / b)
    results.append(("circular Pareto point vs T-grid brute force", worst, 1e-4))

    if params.qA is not None:
        geom = geometry_from_params(params)
        worst = 0.0
        for _ in range(20):
            p1 = math.exp(rng.uniform(math.log(1e-6), math.log(params.P1max)))
            V = rng.uniform(5.0, 100.0)
            a = straight_throughput(p1, V, geom, params)
            b = oracle.quad_straight_throughput(p1, V, geom, params)
            worst = max(worst, abs(a - b) / b)
        results.append(("straight throughput closed form vs quadrature", worst, 1e-7))
        results.append(("antiderivative F central-difference check", oracle.fd_check_F(params, geom), 1e-6))

        lo = straight.uav_min_energy(geom, params).E2
        hi = straight.gt_min_energy(geom, params).E2
        worst = 0.0
        for E2 in np.geomspace(lo, hi, 6)[1:-1]:
            a = straight.pareto_point(float(E2), geom, params).E1
            b = oracle.brute_pareto_straight(float(E2), geom, params)
            worst = max(worst, abs(a - b) / b)
        results.append(("straight Pareto point vs V-grid brute force", worst, 1e-4))

    ok = True
    for name, err, tol in results:
        passed = err <= tol
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}: max rel err {err:.3e} (tol {tol:g})", file=stream)
    return ok


def cmd_validate(args) -> int:
    params = _load(args)
    return EXIT_OK if run_validation(params, sys.stdout) else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2u-tradeoff",
        description="GT/UAV energy trade-off for circular and straight UAV flight.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("circular-extremes", "circular-pareto", "straight-extremes", "straight-pareto", "validate"):
        p = sub.add_parser(name)
        p.add_argument("--config", help="key = value config file (default: bundled preset)")
        p.add_argument("--preset", choices=("reference", "nominal"), default="reference")
        p.add_argument("--points", type=int, default=64, help="sweep size for *-pareto (default 64)")
        p.add_argument("--out", help="CSV output path (default: stdout)")
        p.add_argument("--pc", type=float, help="override GT circuit power, W")
        p.add_argument("--q-bits", type=float, help="override data volume, bits")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    kind = "circular" if args.subcommand.startswith("circular") else "straight"
    try:
        if args.subcommand == "validate":
            return cmd_validate(args)
        if args.subcommand.endswith("extremes"):
            return cmd_extremes(args, kind)
        return cmd_pareto(args, kind)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
