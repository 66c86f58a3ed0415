"""Fixed-wing propulsion power for steady circular and straight flight.

Power functions use plain arithmetic so they also accept numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasiblePowerError
from .params import LEVEL_POWER_COEFF, SystemParams, min_level_power


@dataclass(frozen=True)
class CircularKinematics:
    r: float
    V: float

    def __post_init__(self) -> None:
        if not (self.r > 0 and self.V > 0):
            raise ValueError(f"need r > 0 and V > 0, got r={self.r}, V={self.V}")


def _circ_coeff(r, params: SystemParams):
    # c1 + c2 / (g^2 r^2)
    return params.c1 + params.c2 / (params.g * params.g * r * r)


def circular_power(r, V, params: SystemParams):
    return _circ_coeff(r, params) * V ** 3 + params.c2 / V


def optimal_circular_speed(r, params: SystemParams):
    return (params.c2 / (3.0 * _circ_coeff(r, params))) ** 0.25


def min_circular_power(r, params: SystemParams):
    """Propulsion power at the best speed for radius r."""
    return LEVEL_POWER_COEFF * params.c2 ** 0.75 * _circ_coeff(r, params) ** 0.25


def radius_for_power(P: float, params: SystemParams) -> float:
    """Radius whose minimum circular power equals P (inverse of min_circular_power)."""
    # (P / (k c2^(3/4)))^4 - c1, quotient formed before the single subtraction
    excess = (P / (LEVEL_POWER_COEFF * params.c2 ** 0.75)) ** 4 - params.c1
    if not excess > 0:
        raise InfeasiblePowerError(
            f"power {P!r} W does not exceed the level-flight minimum {min_level_power(params)!r} W"
        )
    return math.sqrt(params.c2 / excess) / params.g


def min_radius(params: SystemParams) -> float:
    return radius_for_power(params.P2max, params)


def straight_power(V, params: SystemParams):
    return params.c1 * V ** 3 + params.c2 / V


def straight_leg_energy(V, D: float, params: SystemParams):
    return D * (params.c1 * V * V + params.c2 / (V * V))


def energy_optimal_speed(params: SystemParams) -> float:
    """Speed minimizing propulsion energy per unit distance, (c2/c1)^(1/4)."""
    return (params.c2 / params.c1) ** 0.25


def min_leg_energy(D: float, params: SystemParams) -> float:
    return 2.0 * D * math.sqrt(params.c1 * params.c2)
