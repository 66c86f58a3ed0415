"""Straight-line flight geometry relative to the GT at the origin."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GeometryError


@dataclass(frozen=True)
class StraightGeometry:
    """Constants of the leg ``q(t) = qA + t*V*dhat``.

    ``c3`` is the signed along-track coordinate of ``qA`` measured from the
    GT's foot point, and ``Hbar_sq`` is H^2 plus the squared cross-track
    offset, so the GT-UAV distance is ``sqrt((V*t + c3)^2 + Hbar_sq)``.
    """

    qA: tuple[float, float]
    qB: tuple[float, float]
    H: float
    D: float
    dhat: tuple[float, float]
    c3: float
    Hbar_sq: float

    @property
    def Hbar(self) -> float:
        return math.sqrt(self.Hbar_sq)


def make_geometry(qA, qB, H: float) -> StraightGeometry:
    ax, ay = (float(v) for v in qA)
    bx, by = (float(v) for v in qB)
    D = math.hypot(bx - ax, by - ay)
    if D == 0.0:
        raise GeometryError(f"straight flight needs distinct endpoints, got qA = qB = {(ax, ay)}")
    dx, dy = (bx - ax) / D, (by - ay) / D
    c3 = ax * dx + ay * dy
    # cross-track offset squared; equals |qA|^2 - c3^2 without the cancellation
    cross = ax * dy - ay * dx
    return StraightGeometry(
        qA=(ax, ay),
        qB=(bx, by),
        H=float(H),
        D=D,
        dhat=(dx, dy),
        c3=c3,
        Hbar_sq=cross * cross + H * H,
    )


def geometry_from_params(params) -> StraightGeometry:
    if params.qA is None or params.qB is None:
        raise GeometryError("straight flight needs qA_m and qB_m in the config")
    return make_geometry(params.qA, params.qB, params.H)
