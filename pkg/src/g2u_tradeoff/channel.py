"""Line-of-sight channel, instantaneous rate and aggregated throughput."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnreachableTargetError
from .geometry import StraightGeometry
from .params import SystemParams
from .scalar_opt import SearchSpec, bisect_monotone

LN2 = math.log(2.0)

G_INVERSE_RTOL = 1e-10
P1_BRACKET_MAX = 1e6


@dataclass(frozen=True)
class RateContext:
    """Link state for :func:`spectral_rate`.

    ``effective_height_sq`` is H^2 for circular flight and Hbar^2 for a
    straight leg. ``p1`` may be a numpy array for vectorized callers.
    """

    p1: float
    gamma0: float
    B: float
    effective_height_sq: float

    def __post_init__(self) -> None:
        if np.any(np.asarray(self.p1) < 0):
            raise ValueError("p1 must be >= 0")
        if not self.effective_height_sq > 0:
            raise ValueError("effective_height_sq must be > 0")


def channel_gain(horizontal_dist_sq, H: float, beta0: float):
    return beta0 / (H * H + horizontal_dist_sq)


def spectral_rate(ctx: RateContext, horizontal_dist_sq):
    """Achievable rate in bit/s at the given squared horizontal distance."""
    snr = ctx.p1 * ctx.gamma0 / (ctx.effective_height_sq + horizontal_dist_sq)
    return ctx.B * np.log1p(snr) / LN2


def circular_throughput(params: SystemParams, T: float, p1: float, r: float) -> float:
    """Bits delivered in time T while circling the GT at radius r."""
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    snr = p1 * params.gamma0 / (params.H ** 2 + r * r)
    return params.B * T * math.log1p(snr) / LN2


def antiderivative_F(z: float, p1: float, gamma0: float, Hbar_sq: float) -> float:
    """Antiderivative of ``ln(1 + p1*gamma0 / (Hbar^2 + z^2))`` with F(0) = 0.

    The textbook form ``z*ln(1+a/(h^2+z^2)) - 2h*atan(z/h) + 2s*atan(z/s)``
    (``a = p1*gamma0``, ``s = sqrt(h^2 + a)``) loses most of its digits when
    ``a << h^2`` because the two arctangent terms nearly cancel. It is
    evaluated here in the algebraically identical form

        z*ln(1 + a/(h^2+z^2)) + 2a/(s+h)*atan(z/s) - 2h*atan(z*a / ((s+h)(s*h + z^2)))

    using ``s - h = a/(s+h)`` and the arctangent subtraction identity (valid
    because ``(z/s)(z/h) >= 0``).
    """
    a = p1 * gamma0
    if a == 0.0:
        return 0.0
    h = math.sqrt(Hbar_sq)
    s = math.sqrt(Hbar_sq + a)
    return (
        z * math.log1p(a / (Hbar_sq + z * z))
        + 2.0 * a / (s + h) * math.atan(z / s)
        - 2.0 * h * math.atan(z * a / ((s + h) * (s * h + z * z)))
    )


def antiderivative_F_textbook(z: float, p1: float, gamma0: float, Hbar_sq: float) -> float:
    """Three-term closed form, kept for cross-checking :func:`antiderivative_F`."""
    a = p1 * gamma0
    h = math.sqrt(Hbar_sq)
    s = math.sqrt(Hbar_sq + a)
    return z * math.log1p(a / (Hbar_sq + z * z)) - 2.0 * h * math.atan(z / h) + 2.0 * s * math.atan(z / s)


def G(p1: float, geom: StraightGeometry, params: SystemParams) -> float:
    """Integral of ``ln(1 + SNR)`` over the along-track coordinate of the leg."""
    return antiderivative_F(geom.D + geom.c3, p1, params.gamma0, geom.Hbar_sq) - antiderivative_F(
        geom.c3, p1, params.gamma0, geom.Hbar_sq
    )


def G_inverse(target: float, geom: StraightGeometry, params: SystemParams) -> float:
    """Transmit power p1 with ``G(p1) = target`` (relative tolerance 1e-10)."""
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    if target == 0:
        return 0.0

    def g(p: float) -> float:
        return G(p, geom, params)

    hi = 1e-9
    while g(hi) < target:
        if hi >= P1_BRACKET_MAX:
            raise UnreachableTargetError(
                f"G(p1) = {target!r} needs p1 above {P1_BRACKET_MAX:g} W"
            )
        hi = min(hi * 10.0, P1_BRACKET_MAX)
    lo = hi / 10.0 if g(hi / 10.0) <= target else 0.0
    return bisect_monotone(g, target, SearchSpec(lo, hi, rtol=G_INVERSE_RTOL, atol=1e-300))


def straight_throughput(p1: float, V: float, geom: StraightGeometry, params: SystemParams) -> float:
    if not V > 0:
        raise ValueError(f"speed must be > 0, got {V}")
    return params.B * G(p1, geom, params) / (V * LN2)
