"""Mechanical checks of the two routes that turn a pair of binomial series
into the half-step bilateral sum.

Expand (1+z)^n / z^k and (1-z)^n / (-z)^k as two-sided binomial series over
offsets j.  Adding them kills every odd-j term and doubles the even ones;
subtracting kills the even terms instead.  Reindexing the survivors by
m = j/2 (sum route) or m = (j+1)/2 (difference route) produces an order
(2,2) bilateral series in z^2 whose parameters are affine images of (n, k):

    sum route:   ((k-n)/2, (k-n+1)/2 ; (k+1)/2, (k+2)/2),
                 prefactor 2 Gamma(n+1) / (Gamma(k+1) Gamma(n-k+1))
    diff route:  ((k-n-1)/2, (k-n)/2 ; k/2, (k+1)/2),
                 prefactor 2 Gamma(n+1) / (z Gamma(k) Gamma(n-k+2))

Under k = 2c-1 (sum) or k = 2c (diff) and n = 2c-2a-1 both routes land on
the same tuple (a, a+1/2; c, c+1/2), which is how ``cf_duplication`` earns
its square-root closed form.

The cancellation checks use the formal convention
(-z)^(k+j) / (-z)^k = (-1)^j z^j: principal powers of -z with non-integer
k would drag in phase factors the term-by-term manipulation ignores.  The
end-to-end check compensates by comparing honest principal powers on both
sides; that is where branch consistency is actually on trial.

When k - n is an integer the prefactor has a gamma pole in a denominator
and vanishes while the mirrored term values blow up; the coefficient
comparison is then 0 * inf at those offsets and is skipped with a note
rather than forced.  The ratio comparison keeps its full meaning on the
surviving side of such terminated expansions.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .closed_forms import BranchChoice, _power_log
from .errors import DivergenceError, InvalidParameterError, PoleError
from .gammafn import GammaBracket, gamma_bracket
from .pascal_plane import PlanePoint, binom, binom_row_ratio
from .reports import VerificationReport
from .series import (
    UNIT_MODULUS_TOL,
    BilateralParams,
    ConvergenceBudget,
    eval_bilateral,
)

__all__ = [
    "CANCELLATION_TOL",
    "COEFFICIENT_TOL",
    "RATIO_TOL",
    "END_TO_END_TOL",
    "NEGLIGIBLE_COEFF",
    "DerivationPoint",
    "check_sum_cancellation",
    "check_diff_cancellation",
    "check_sum_path",
    "check_diff_path",
    "sum_path_params",
    "diff_path_params",
    "duplication_from_sum_path",
    "duplication_from_diff_path",
]

CANCELLATION_TOL = 1e-14
COEFFICIENT_TOL = 1e-10
RATIO_TOL = 1e-12
END_TO_END_TOL = 1e-5

# coefficients smaller than this are skipped in ratio-style comparisons
NEGLIGIBLE_COEFF = 1e-6

# irrational shift used to confirm the weights do not depend on k
_K_SHIFT = 0.6180339887498949

_PATH_BUDGET = ConvergenceBudget(rel_tol=1e-7, max_half_width=200_000)

_TINY = 1e-300


@dataclass(frozen=True)
class DerivationPoint:
    """One probe point for the route checks: exponent n, anchor offset k,
    unit-modulus argument z, and the half-width of offsets examined."""

    n: complex
    k: complex
    z: complex
    j_range: int = 20

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", complex(self.n))
        object.__setattr__(self, "k", complex(self.k))
        z = complex(self.z)
        if abs(abs(z) - 1.0) > UNIT_MODULUS_TOL:
            raise InvalidParameterError(
                f"DerivationPoint.z must have unit modulus, got |z| = {abs(z)!r}"
            )
        object.__setattr__(self, "z", z / abs(z))
        if int(self.j_range) != self.j_range or self.j_range < 1:
            raise InvalidParameterError("DerivationPoint.j_range must be an integer >= 1")
        object.__setattr__(self, "j_range", int(self.j_range))

    def _point(self) -> dict:
        return {"n": self.n, "k": self.k, "z": self.z}


def _weights(k: complex, z: complex, j_range: int, sign: float) -> dict[int, complex]:
    """Combined weight z^(k+j)/z^k + sign * (-1)^j z^j for each offset j.

    The first quotient is evaluated as (z^k * z^j) / z^k: the integer power
    z^j is exact to a few ulp, and splitting off z^k keeps the quotient's
    phase error flat in j (a direct exp-ratio drifts past 1e-14 by |j|=40).
    """
    zk = z**k
    out: dict[int, complex] = {}
    for j in range(-j_range, j_range + 1):
        zj = z**j
        q1 = (zk * zj) / zk
        q2 = zj if j % 2 == 0 else -zj
        out[j] = q1 + sign * q2
    return out


def _cancellation_report(pt: DerivationPoint, sign: float, identity_id: str) -> VerificationReport:
    w_here = _weights(pt.k, pt.z, pt.j_range, sign)
    w_shift = _weights(pt.k + _K_SHIFT, pt.z, pt.j_range, sign)
    surviving_parity = 0 if sign > 0 else 1
    worst = 0.0
    worst_j = 0
    for j in range(-pt.j_range, pt.j_range + 1):
        expected = 2.0 * pt.z**j if j % 2 == surviving_parity else 0.0
        res = abs(w_here[j] - expected)
        shift_res = abs(w_here[j] - w_shift[j])
        if res > worst:
            worst, worst_j = res, j
        if shift_res > worst:
            worst, worst_j = shift_res, j
    return VerificationReport(
        identity_id=identity_id,
        parameter_point=pt._point(),
        residual=worst,
        tolerance=CANCELLATION_TOL,
        notes=f"|j| <= {pt.j_range}, worst offset j={worst_j}, k-shift consistency included",
    )


def check_sum_cancellation(pt: DerivationPoint) -> VerificationReport:
    """Adding the two binomial series: odd-offset weights vanish, even ones
    equal 2 z^j.  Residual is the worst absolute deviation over all offsets,
    including agreement with a k-shifted recomputation."""
    return _cancellation_report(pt, +1.0, "sum_path.cancellation")


def check_diff_cancellation(pt: DerivationPoint) -> VerificationReport:
    """Subtracting the two binomial series: even-offset weights vanish, odd
    ones equal 2 z^j."""
    return _cancellation_report(pt, -1.0, "diff_path.cancellation")


def sum_path_params(n: complex, k: complex) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Upper/lower parameter pairs of the sum-route series in z^2."""
    n, k = complex(n), complex(k)
    return ((k - n) / 2.0, (k - n + 1.0) / 2.0), ((k + 1.0) / 2.0, (k + 2.0) / 2.0)


def diff_path_params(n: complex, k: complex) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Upper/lower parameter pairs of the difference-route series in z^2."""
    n, k = complex(n), complex(k)
    return ((k - n - 1.0) / 2.0, (k - n) / 2.0), (k / 2.0, (k + 1.0) / 2.0)


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def _term_walk(
    a_pair: tuple[complex, complex],
    c_pair: tuple[complex, complex],
    z2: complex,
    half: int,
) -> dict[int, complex | None]:
    """Series terms t_m for |m| <= half from t_0 = 1 by the ratio recurrence.

    None marks offsets past a pole factor (a lower parameter hitting a
    nonpositive integer going up, an upper one going down); such terms are
    individually infinite and only meaningful against a vanishing prefactor.
    """
    a1, a2 = a_pair
    c1, c2 = c_pair
    t: dict[int, complex | None] = {0: 1.0 + 0j}
    cur: complex | None = 1.0 + 0j
    for m in range(half):
        if cur is not None:
            den = (c1 + m) * (c2 + m)
            cur = None if den == 0 else cur * (a1 + m) * (a2 + m) / den * z2
        t[m + 1] = cur
    cur = 1.0 + 0j
    for m in range(0, -half, -1):
        if cur is not None:
            den = (a1 + m - 1.0) * (a2 + m - 1.0) * z2
            cur = None if den == 0 else cur * (c1 + m - 1.0) * (c2 + m - 1.0) / den
        t[m - 1] = cur
    return t


def _path_reports(pt: DerivationPoint, kind: str) -> list[VerificationReport]:
    n, k, z = pt.n, pt.k, pt.z
    z2 = z * z
    if kind == "sum":
        a_pair, c_pair = sum_path_params(n, k)
        # coefficient of z^(2m) in the added pair is 2 binom(n, k+2m)
        base = k
        pref = 2.0 * gamma_bracket(GammaBracket([n + 1.0], [k + 1.0, n - k + 1.0]))
        power_shift = 1.0 + 0j
        prefix = "sum_path"
    else:
        a_pair, c_pair = diff_path_params(n, k)
        # coefficient of z^(2m-1) in the subtracted pair is 2 binom(n, k-1+2m)
        base = k - 1.0
        pref = 2.0 * gamma_bracket(GammaBracket([n + 1.0], [k, n - k + 2.0])) / z
        power_shift = 1.0 / z
        prefix = "diff_path"

    half = pt.j_range // 2
    ms = range(-half, half + 1)
    coeffs = {m: binom(PlanePoint(n, base + 2.0 * m)) for m in ms}
    terms = _term_walk(a_pair, c_pair, z2, half)

    worst_c = 0.0
    worst_c_m = 0
    skipped = 0
    indeterminate = 0
    checked = 0
    for m in ms:
        if abs(coeffs[m]) < NEGLIGIBLE_COEFF:
            skipped += 1
            continue
        if terms[m] is None:
            # prefactor 0 against an infinite term: no finite claim to test
            indeterminate += 1
            continue
        lhs = 2.0 * coeffs[m] * z2**m * power_shift
        rhs = pref * terms[m]
        res = _rel(lhs, rhs)
        checked += 1
        if res > worst_c:
            worst_c, worst_c_m = res, m
    notes_c = f"offsets m in [{-half}, {half}], {checked} compared, worst at m={worst_c_m}"
    if skipped:
        notes_c += f"; skipped {skipped} with |coeff| < {NEGLIGIBLE_COEFF:g}"
    if indeterminate:
        notes_c += f"; skipped {indeterminate} indeterminate (0 * inf)"
    rep_coeff = VerificationReport(
        identity_id=f"{prefix}.coefficients",
        parameter_point=pt._point(),
        residual=worst_c,
        tolerance=COEFFICIENT_TOL,
        notes=notes_c,
    )

    worst_r = 0.0
    worst_r_m = 0
    skipped_r = 0
    checked_r = 0
    (a1, a2), (c1, c2) = a_pair, c_pair
    for m in range(-half, half):
        if abs(coeffs[m]) < NEGLIGIBLE_COEFF or abs(coeffs[m + 1]) < NEGLIGIBLE_COEFF:
            skipped_r += 1
            continue
        den = (c1 + m) * (c2 + m)
        if den == 0:
            skipped_r += 1
            continue
        try:
            lhs = binom_row_ratio(n, base + 2.0 * m, 2) * z2
        except PoleError:
            skipped_r += 1
            continue
        rhs = (a1 + m) * (a2 + m) / den * z2
        res = _rel(lhs, rhs)
        checked_r += 1
        if res > worst_r:
            worst_r, worst_r_m = res, m
    notes_r = f"consecutive-term ratios, {checked_r} compared, worst at m={worst_r_m}"
    if skipped_r:
        notes_r += f"; skipped {skipped_r} near coefficient zeros or pole factors"
    rep_ratio = VerificationReport(
        identity_id=f"{prefix}.term_ratio",
        parameter_point=pt._point(),
        residual=worst_r,
        tolerance=RATIO_TOL,
        notes=notes_r,
    )

    plus = cmath.exp(_power_log(1.0 + z, n, "1+z") - _power_log(z, k, "z"))
    minus = cmath.exp(_power_log(1.0 - z, n, "1-z") - _power_log(-z, k, "-z"))
    lhs_total = plus + minus if kind == "sum" else plus - minus
    try:
        params = BilateralParams(a_pair, c_pair, z2)
        sv = eval_bilateral(params, _PATH_BUDGET)
    except (DivergenceError, InvalidParameterError) as exc:
        raise DivergenceError(
            f"{prefix} end-to-end series not evaluable: {exc}",
            partial_reports=(rep_coeff, rep_ratio),
        ) from exc
    rep_end = VerificationReport(
        identity_id=f"{prefix}.end_to_end",
        parameter_point=pt._point(),
        residual=_rel(lhs_total, pref * sv.value),
        tolerance=END_TO_END_TOL,
        n_terms_used=sv.n_terms,
        notes=f"tail_bound={sv.tail_bound:.3e}, converged={sv.converged}",
    )
    return [rep_coeff, rep_ratio, rep_end]


def check_sum_path(pt: DerivationPoint) -> list[VerificationReport]:
    """Three reports on the sum route: (coefficients, term_ratio, end_to_end).

    The end-to-end stage needs Re(n) > 0 for its series gate; when that
    fails (or the mapped series parameters are degenerate), DivergenceError
    is raised carrying the two completed reports as ``partial_reports``.
    """
    return _path_reports(pt, "sum")


def check_diff_path(pt: DerivationPoint) -> list[VerificationReport]:
    """Difference-route counterpart of check_sum_path; same report layout."""
    return _path_reports(pt, "diff")


def duplication_from_sum_path(
    a: complex, c: complex, z: complex, branch: BranchChoice = BranchChoice.PLUS
) -> complex:
    """Value of the half-step bilateral sum obtained by running the sum
    route backwards at k = 2c-1, n = 2c-2a-1 with w = sqrt(z)."""
    a, c, z = complex(a), complex(c), complex(z)
    n = 2.0 * c - 2.0 * a - 1.0
    k = 2.0 * c - 1.0
    w = cmath.sqrt(z)
    if branch is BranchChoice.MINUS:
        w = -w
    plus = cmath.exp(_power_log(1.0 + w, n, "1+sqrt(z)") - _power_log(w, k, "sqrt(z)"))
    minus = cmath.exp(_power_log(1.0 - w, n, "1-sqrt(z)") - _power_log(-w, k, "-sqrt(z)"))
    inv_pref = gamma_bracket(GammaBracket([k + 1.0, n - k + 1.0], [n + 1.0])) / 2.0
    return (plus + minus) * inv_pref


def duplication_from_diff_path(
    a: complex, c: complex, z: complex, branch: BranchChoice = BranchChoice.PLUS
) -> complex:
    """Same value through the difference route at k = 2c, n = 2c-2a-1.

    Genuinely different arithmetic from the sum route (extra factor w, a
    shifted k, a subtraction), which makes cross-agreement of the two a
    real consistency check rather than a tautology."""
    a, c, z = complex(a), complex(c), complex(z)
    n = 2.0 * c - 2.0 * a - 1.0
    k = 2.0 * c
    w = cmath.sqrt(z)
    if branch is BranchChoice.MINUS:
        w = -w
    plus = cmath.exp(_power_log(1.0 + w, n, "1+sqrt(z)") - _power_log(w, k, "sqrt(z)"))
    minus = cmath.exp(_power_log(1.0 - w, n, "1-sqrt(z)") - _power_log(-w, k, "-sqrt(z)"))
    inv_pref = w * gamma_bracket(GammaBracket([k, n - k + 2.0], [n + 1.0])) / 2.0
    return (plus - minus) * inv_pref
