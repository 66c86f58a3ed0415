"""System constants and the flat ``key = value`` config format.

All values are held in linear SI units. Decibel quantities appear only in the
config text (``beta0_dB`` and ``sigma2_dBm``).
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ConfigError

# 3^(-3/4) + 3^(1/4): coefficient of the minimum circular-flight power.
LEVEL_POWER_COEFF = 3.0 ** -0.75 + 3.0 ** 0.25

DEFAULT_G = 9.8

Point2 = tuple[float, float]

_REQUIRED = (
    "H_m",
    "B_Hz",
    "sigma2_dBm",
    "beta0_dB",
    "Pc_W",
    "P1max_W",
    "P2max_W",
    "c1",
    "c2",
    "Q_bits",
)
_OPTIONAL = ("g_mps2", "qA_m", "qB_m")


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class SystemParams:
    """Physical and link constants shared by every computation.

    ``gamma0`` is derived as ``beta0 / sigma2`` and cannot be passed in.
    ``qA``/``qB`` are optional straight-flight endpoints (ground plane, m).
    """

    H: float
    B: float
    sigma2: float
    beta0: float
    Pc: float
    P1max: float
    P2max: float
    c1: float
    c2: float
    Q: float
    g: float = DEFAULT_G
    qA: Point2 | None = None
    qB: Point2 | None = None
    gamma0: float = field(init=False)

    def __post_init__(self) -> None:
        for name in ("H", "B", "sigma2", "beta0", "P1max", "P2max", "c1", "c2", "g", "Q"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be finite and > 0, got {value!r}")
        if not (math.isfinite(self.Pc) and self.Pc >= 0):
            raise ConfigError(f"Pc must be finite and >= 0, got {self.Pc!r}")
        level = min_level_power(self)
        if not self.P2max > level:
            raise ConfigError(
                f"P2max > (3^-3/4 + 3^1/4) c1^1/4 c2^3/4 violated: {self.P2max!r} <= {level!r}"
            )
        if (self.qA is None) != (self.qB is None):
            raise ConfigError("qA and qB must be given together")
        for name in ("qA", "qB"):
            q = getattr(self, name)
            if q is not None:
                q = tuple(float(v) for v in q)
                if len(q) != 2 or not all(math.isfinite(v) for v in q):
                    raise ConfigError(f"{name} must be two finite numbers, got {q!r}")
                object.__setattr__(self, name, q)
        object.__setattr__(self, "gamma0", self.beta0 / self.sigma2)

    def replace(self, **changes) -> SystemParams:
        return dataclasses.replace(self, **changes)


def min_level_power(params: SystemParams) -> float:
    """Infimum over the radius of the minimum circular-flight power (r -> inf)."""
    return LEVEL_POWER_COEFF * params.c1 ** 0.25 * params.c2 ** 0.75


def _parse_pair(key: str, raw: str) -> Point2:
    parts = [p.strip() for p in raw.strip().strip("()[]").split(",")]
    if len(parts) != 2:
        raise ConfigError(f"{key}: expected 'x, y', got {raw!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise ConfigError(f"{key}: non-numeric value {raw!r}") from None


def parse_config(text: str) -> SystemParams:
    """Parse a flat ``key = value`` document into :class:`SystemParams`.

    Blank lines and ``#`` comments (full-line or trailing) are ignored.
    Unknown and duplicate keys are rejected.
    """
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _REQUIRED and key not in _OPTIONAL:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value

    missing = [k for k in _REQUIRED if k not in raw]
    if missing:
        raise ConfigError(f"missing required key(s): {', '.join(missing)}")

    nums: dict[str, float] = {}
    for key in _REQUIRED + ("g_mps2",):
        if key not in raw:
            continue
        try:
            nums[key] = float(raw[key])
        except ValueError:
            raise ConfigError(f"{key}: non-numeric value {raw[key]!r}") from None

    qA = _parse_pair("qA_m", raw["qA_m"]) if "qA_m" in raw else None
    qB = _parse_pair("qB_m", raw["qB_m"]) if "qB_m" in raw else None

    return SystemParams(
        H=nums["H_m"],
        B=nums["B_Hz"],
        sigma2=dbm_to_watts(nums["sigma2_dBm"]),
        beta0=db_to_linear(nums["beta0_dB"]),
        Pc=nums["Pc_W"],
        P1max=nums["P1max_W"],
        P2max=nums["P2max_W"],
        c1=nums["c1"],
        c2=nums["c2"],
        Q=nums["Q_bits"],
        g=nums.get("g_mps2", DEFAULT_G),
        qA=qA,
        qB=qB,
    )


def serialize(params: SystemParams) -> str:
    """Inverse of :func:`parse_config` (up to dB round-off)."""
    lines = [
        f"H_m = {params.H!r}",
        f"B_Hz = {params.B!r}",
        f"sigma2_dBm = {10.0 * math.log10(params.sigma2) + 30.0!r}",
        f"beta0_dB = {10.0 * math.log10(params.beta0)!r}",
        f"Pc_W = {params.Pc!r}",
        f"P1max_W = {params.P1max!r}",
        f"P2max_W = {params.P2max!r}",
        f"c1 = {params.c1!r}",
        f"c2 = {params.c2!r}",
        f"g_mps2 = {params.g!r}",
        f"Q_bits = {params.Q!r}",
    ]
    if params.qA is not None:
        lines.append(f"qA_m = {params.qA[0]!r}, {params.qA[1]!r}")
        lines.append(f"qB_m = {params.qB[0]!r}, {params.qB[1]!r}")
    return "\n".join(lines) + "\n"


def load_config(path: str | Path) -> SystemParams:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)


def builtin_config(name: str = "reference") -> SystemParams:
    """Load one of the bundled configs: ``reference`` or ``nominal``."""
    try:
        text = resources.files(__package__).joinpath(f"data/{name}.conf").read_text()
    except FileNotFoundError:
        raise ConfigError(f"no bundled config named {name!r}") from None
    return parse_config(text)
