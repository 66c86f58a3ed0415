"""Result containers shared by the circular and straight trade-off solvers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import NumericalError
from .params import SystemParams

LEMMA1_RTOL = 1e-6
# Relative slack on the p1 and P2 caps, absorbs round-off at active constraints.
FEAS_RTOL = 1e-9


class Branch(str, enum.Enum):
    FAST = "fast"
    SLOW = "slow"


@dataclass(frozen=True)
class CircularDesign:
    T: float
    r: float
    V: float
    p1: float


@dataclass(frozen=True)
class StraightDesign:
    V: float
    p1: float
    branch: Branch
    T: float


Design = Union[CircularDesign, StraightDesign]


@dataclass(frozen=True)
class EnergyPoint:
    """A Pareto candidate (E1, E2) with the design that realizes it.

    ``throughput`` is the bit count the design actually delivers; it equals
    the target Q at every Pareto-optimal point.
    """

    E1: float
    E2: float
    design: Design
    throughput: float


@dataclass(frozen=True)
class ParetoCurve:
    points: tuple[EnergyPoint, ...]
    trajectory_kind: str
    params: SystemParams
    warnings: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def E1(self) -> list[float]:
        return [p.E1 for p in self.points]

    @property
    def E2(self) -> list[float]:
        return [p.E2 for p in self.points]


def check_lemma1(throughput: float, Q: float) -> None:
    if abs(throughput - Q) > LEMMA1_RTOL * Q:
        raise NumericalError(f"throughput {throughput!r} bits misses target {Q!r} beyond rtol {LEMMA1_RTOL}")


def e2_grid(E2min: float, E2max: float, n: int) -> list[float]:
    """Geometric E2 sweep with exact endpoints."""
    if n < 2:
        raise ValueError("need at least 2 sweep points")
    grid = [float(x) for x in np.geomspace(E2min, E2max, n)]
    grid[0], grid[-1] = E2min, E2max
    return grid
