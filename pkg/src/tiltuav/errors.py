"""Exception types shared across the package."""

from __future__ import annotations


class TiltuavError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(TiltuavError):
    """A physical parameter or command violates its invariant."""


class DegenerateFrameError(TiltuavError):
    """Frame construction inputs are (nearly) parallel or zero-length."""


class ZeroThrustError(TiltuavError):
    """Requested wrench has zero total thrust; tilt angle is undefined."""


class TiltSingularityError(TiltuavError):
    """Roll torque requested at (near-)horizontal thrust, where it is unachievable."""


class UnattainableAttitudeError(TiltuavError):
    """Force demand requires a roll reference beyond the configured bound."""


class SimDivergedError(TiltuavError):
    """Simulated state exceeded the instability guard."""


class ScenarioError(TiltuavError):
    """Scenario file failed to parse or validate.

    `field` carries the dotted path of the offending entry when known.
    """

    def __init__(self, field: str | None, reason: str):
        self.field = field
        self.reason = reason
        msg = f"{field}: {reason}" if field else reason
        super().__init__(msg)


class EmptyLogError(TiltuavError):
    """Metrics requested on a log with no records."""
