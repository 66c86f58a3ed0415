"""Exception hierarchy.

Everything raised on purpose derives from :class:`TradeoffError`. The CLI maps
:class:`ConfigError` to exit status 2 and :class:`InfeasibleError` to 3.
"""


class TradeoffError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(TradeoffError, ValueError):
    """Bad configuration text or parameter values."""


class GeometryError(ConfigError):
    """Degenerate straight-flight geometry (coincident endpoints)."""


class InfeasibleError(TradeoffError):
    """The requested operating point or problem has no feasible solution."""


class InfeasiblePowerError(InfeasibleError):
    """UAV power cap does not exceed the minimum level-flight power."""


class PowerOutOfRangeError(InfeasibleError):
    """Average propulsion power E2/T lies outside the achievable circular range."""


class InfeasiblePointError(InfeasibleError):
    """Required GT transmit power exceeds its cap."""


class EmptyFeasibleSetError(InfeasibleError):
    """A search found no feasible candidate."""


class InfeasibleEnergyError(EmptyFeasibleSetError):
    """No feasible design realizes the requested UAV energy."""


class UnboundedTimeError(InfeasibleError):
    """GT energy minimum needs an infinitely long mission (zero circuit power)."""


class UnreachableTargetError(InfeasibleError):
    """Monotone inversion target lies above the reachable range."""


class BelowMinimumEnergyError(InfeasibleError):
    """Straight-leg energy below the minimum 2*D*sqrt(c1*c2)."""


class NumericalError(TradeoffError):
    """A numerical routine failed to meet its contract."""


class BracketError(NumericalError):
    """Root search bracket does not contain the target."""


class ToleranceNotMetError(NumericalError):
    """Adaptive routine hit its refinement cap before meeting tolerance."""
