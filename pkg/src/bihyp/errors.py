"""Exception hierarchy shared by every bihyp module.

All numerical routines in this package signal trouble through these types
instead of returning NaN or infinity.  Callers that drive whole parameter
sweeps catch :class:`BihypError` once and record the failure per point.
"""

from __future__ import annotations

__all__ = [
    "BihypError",
    "PoleError",
    "DivergenceError",
    "BranchCutError",
    "LimitDivergesError",
    "InvalidParameterError",
]


class BihypError(Exception):
    """Base class for all bihyp-specific errors."""


class PoleError(BihypError):
    """An argument sits on (or numerically indistinguishable from) a gamma pole."""


class DivergenceError(BihypError):
    """A bilateral series fails its convergence gate, or a limit does not settle.

    Multi-stage checks that hit divergence only in their final stage attach
    the reports of the stages that did complete as ``partial_reports``.
    """

    def __init__(self, message: str, partial_reports=()) -> None:
        super().__init__(message)
        self.partial_reports = tuple(partial_reports)


class BranchCutError(BihypError):
    """A non-integer power was requested with its base on the negative real axis."""


class LimitDivergesError(BihypError):
    """The limiting binomial value grows without bound instead of settling."""


class InvalidParameterError(BihypError, ValueError):
    """Inputs violate a documented precondition (not a runtime math failure)."""
