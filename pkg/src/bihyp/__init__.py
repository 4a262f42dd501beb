"""Bilateral hypergeometric series on the unit circle, the plane extension
of the binomial coefficient, and the closed forms tying them together,
with a verification CLI (see bihyp.cli / the `bihyp` console script)."""

from .closed_forms import (
    BranchChoice,
    cf_bilateral_binomial,
    cf_duplication,
    cf_dougall,
    cf_minus_one,
    cf_unit_value,
    kummer_half,
    kummer_half_trig,
    kummer_sum,
)
from .derivations import (
    DerivationPoint,
    check_diff_cancellation,
    check_diff_path,
    check_sum_cancellation,
    check_sum_path,
    diff_path_params,
    duplication_from_diff_path,
    duplication_from_sum_path,
    sum_path_params,
)
from .errors import (
    BihypError,
    BranchCutError,
    DivergenceError,
    InvalidParameterError,
    LimitDivergesError,
    PoleError,
)
from .gammafn import (
    GammaBracket,
    gamma,
    gamma_bracket,
    legendre_residual,
    log_gamma,
    pochhammer,
    rgamma,
)
from .pascal_plane import PlanePoint, binom, binom_row_ratio
from .registry import REGISTRY, Identity, registry_ids, run_suite
from .reports import SuiteConfig, VerificationReport
from .series import (
    BilateralParams,
    ConvergenceBudget,
    SeriesValue,
    decay_exponent,
    eval_2f1_minus1,
    eval_bilateral,
    series_term,
    validate_params,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BihypError",
    "PoleError",
    "DivergenceError",
    "BranchCutError",
    "LimitDivergesError",
    "InvalidParameterError",
    "gamma",
    "log_gamma",
    "rgamma",
    "GammaBracket",
    "gamma_bracket",
    "pochhammer",
    "legendre_residual",
    "PlanePoint",
    "binom",
    "binom_row_ratio",
    "BilateralParams",
    "ConvergenceBudget",
    "SeriesValue",
    "validate_params",
    "decay_exponent",
    "series_term",
    "eval_bilateral",
    "eval_2f1_minus1",
    "BranchChoice",
    "cf_bilateral_binomial",
    "cf_duplication",
    "cf_dougall",
    "cf_unit_value",
    "cf_minus_one",
    "kummer_sum",
    "kummer_half",
    "kummer_half_trig",
    "DerivationPoint",
    "check_sum_cancellation",
    "check_diff_cancellation",
    "check_sum_path",
    "check_diff_path",
    "sum_path_params",
    "diff_path_params",
    "duplication_from_sum_path",
    "duplication_from_diff_path",
    "VerificationReport",
    "SuiteConfig",
    "Identity",
    "REGISTRY",
    "registry_ids",
    "run_suite",
]
