"""Deterministic 1-D minimization and monotone root finding.

Objectives signal infeasibility by returning ``math.inf``; these routines never
raise mid-search on an infeasible evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, EmptyFeasibleSetError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

Func = Callable[[float], float]


@dataclass(frozen=True)
class SearchSpec:
    lo: float
    hi: float
    n_grid: int = 256
    rtol: float = 1e-10
    atol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"bounds must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.rtol <= 0 or self.atol <= 0:
            raise ValueError("tolerances must be > 0")
        if self.n_grid < 8:
            raise ValueError("n_grid must be >= 8")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def _safe(f: Func, x: float) -> float:
    y = f(x)
    return y if y == y else math.inf  # NaN counts as infeasible


def minimize_1d(f: Func, spec: SearchSpec) -> tuple[float, float]:
    """Grid scan of ``n_grid`` points followed by golden-section refinement.

    The golden-section search runs on the two grid cells around the best grid
    point. Returns ``(x_best, f_best)``; ``f_best`` is never above the best
    grid value.
    """
    n = spec.n_grid
    step = (spec.hi - spec.lo) / (n - 1)
    xs = [spec.lo + i * step for i in range(n - 1)] + [spec.hi]
    ys = [_safe(f, x) for x in xs]

    i_best = min(range(n), key=ys.__getitem__)
    x_best, y_best = xs[i_best], ys[i_best]
    if math.isinf(y_best):
        raise EmptyFeasibleSetError(f"no feasible point on [{spec.lo}, {spec.hi}]")

    a = xs[max(i_best - 1, 0)]
    b = xs[min(i_best + 1, n - 1)]
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = _safe(f, c), _safe(f, d)
    for _ in range(spec.max_iter):
        if b - a <= spec.rtol * max(abs(a), abs(b)) + spec.atol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = _safe(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _safe(f, d)

    for x, y in ((c, fc), (d, fd)):
        if y < y_best:
            x_best, y_best = x, y
    return x_best, y_best


def bisect_monotone(f: Func, target: float, spec: SearchSpec) -> float:
    """Solve ``f(x) = target`` for nondecreasing ``f`` on ``[lo, hi]``.

    Stops once ``|f(x) - target| <= rtol*|target| + atol`` or when the bracket
    can no longer be split in floating point.
    """
    lo, hi = spec.lo, spec.hi
    f_lo, f_hi = f(lo), f(hi)
    tol = spec.rtol * abs(target) + spec.atol
    if not f_lo - tol <= target <= f_hi + tol:
        raise BracketError(f"target {target!r} outside [f(lo), f(hi)] = [{f_lo!r}, {f_hi!r}]")
    if abs(f_lo - target) <= tol:
        return lo
    if abs(f_hi - target) <= tol:
        return hi

    for _ in range(spec.max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if abs(f_mid - target) <= tol:
            return mid
        if f_mid < target:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo if abs(f_lo - target) <= abs(f_hi - target) else hi
