"""Energy trade-off between a ground terminal and a fixed-wing UAV collecting its data.

The GT spends transmit and circuit energy to upload Q bits; the UAV spends
propulsion energy flying either a circle centred on the GT or a straight leg
past it. The modules below compute the Pareto boundary of the two energies.
"""
from .errors import ConfigError, InfeasibleError, NumericalError, TradeoffError
from .geometry import StraightGeometry, make_geometry
from .params import SystemParams, builtin_config, load_config, parse_config, serialize
from .points import Branch, CircularDesign, EnergyPoint, ParetoCurve, StraightDesign

__all__ = [
    "Branch",
    "CircularDesign",
    "ConfigError",
    "EnergyPoint",
    "InfeasibleError",
    "NumericalError",
    "ParetoCurve",
    "StraightDesign",
    "StraightGeometry",
    "SystemParams",
    "TradeoffError",
    "builtin_config",
    "load_config",
    "make_geometry",
    "parse_config",
    "serialize",
]

__version__ = "0.1.0"
