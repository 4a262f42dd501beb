"""Report and configuration records shared by the checkers, the registry,
and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError

__all__ = ["VerificationReport", "SuiteConfig"]


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    residual is a nonnegative number on whatever scale the check defines
    (usually a relative error, sometimes a normalized max over sub-checks);
    passed is derived, never set by hand.  A NaN residual counts as failed.
    """

    identity_id: str
    parameter_point: dict
    residual: float
    tolerance: float
    n_terms_used: int | None = None
    notes: str = ""
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        point = {str(k): complex(v) for k, v in dict(self.parameter_point).items()}
        object.__setattr__(self, "parameter_point", point)
        res = float(self.residual)
        tol = float(self.tolerance)
        object.__setattr__(self, "residual", res)
        object.__setattr__(self, "tolerance", tol)
        # res == res filters NaN; comparisons with NaN are always False anyway,
        # spelled out so the intent survives refactoring
        object.__setattr__(self, "passed", bool(res == res and res <= tol))


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs for the verification suite and the series engine behind it."""

    rel_tol: float = 1e-6
    max_half_width: int = 200_000
    sample_count: int = 50
    rng_seed: int = 42
    identity_filter: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0):
            raise InvalidParameterError("SuiteConfig.rel_tol must be positive")
        if int(self.max_half_width) < 1:
            raise InvalidParameterError("SuiteConfig.max_half_width must be >= 1")
        if int(self.sample_count) < 1:
            raise InvalidParameterError("SuiteConfig.sample_count must be >= 1")
        if self.identity_filter is not None:
            object.__setattr__(self, "identity_filter", tuple(str(s) for s in self.identity_filter))
