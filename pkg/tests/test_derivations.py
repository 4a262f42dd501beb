import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyp.derivations import CANCELLATION_TOL
from bihyp import (
    BranchChoice,
    DerivationPoint,
    DivergenceError,
    InvalidParameterError,
    cf_duplication,
    check_diff_cancellation,
    check_diff_path,
    check_sum_cancellation,
    check_sum_path,
    diff_path_params,
    duplication_from_diff_path,
    duplication_from_sum_path,
    sum_path_params,
)

unit_theta = st.floats(0.15, math.pi - 0.15)
off_int_k = st.floats(-0.85, 0.85).filter(lambda k: abs(k - round(k)) >= 0.1)


def test_point_validation():
    with pytest.raises(InvalidParameterError):
        DerivationPoint(2.0, 0.3, 0.5)  # |z| != 1
    with pytest.raises(InvalidParameterError):
        DerivationPoint(2.0, 0.3, cmath.exp(1j), j_range=0)
    pt = DerivationPoint(2.0, 0.3, (1.0 + 1e-11) * cmath.exp(1j))
    assert abs(abs(pt.z) - 1.0) < 1e-15


def test_weight_values_by_hand():
    z = cmath.exp(0.9j)
    pt = DerivationPoint(2.5, 0.3, z, j_range=2)
    rep_sum = check_sum_cancellation(pt)
    rep_diff = check_diff_cancellation(pt)
    # Both checks compare against 2 z^j on the surviving parity and 0 on
    # the killed one; at j_range=2 that covers j in {-2..2}.
    assert rep_sum.residual < CANCELLATION_TOL
    assert rep_diff.residual < CANCELLATION_TOL
    assert rep_sum.identity_id == "sum_path.cancellation"
    assert rep_diff.identity_id == "diff_path.cancellation"


@given(off_int_k, unit_theta)
@settings(max_examples=100)
def test_cancellation_wide_offsets(k, theta):
    pt = DerivationPoint(2.0, k, cmath.exp(1j * theta), j_range=40)
    assert check_sum_cancellation(pt).residual <= CANCELLATION_TOL
    assert check_diff_cancellation(pt).residual <= CANCELLATION_TOL


def test_parameter_maps_at_dyadic_anchor():
    # At k = 2c-1, n = 2c-2a-1 the sum route lands exactly on the
    # half-step pairs (a, a+1/2; c, c+1/2); the difference route does the
    # same at k = 2c.
    a, c = -0.75, 1.5
    n = 2 * c - 2 * a - 1
    uppers, lowers = sum_path_params(n, 2 * c - 1)
    assert uppers == (a, a + 0.5)
    assert lowers == (c, c + 0.5)
    uppers, lowers = diff_path_params(n, 2 * c)
    assert uppers == (a, a + 0.5)
    assert lowers == (c, c + 0.5)


def _assert_route_reports(reports, prefix):
    assert [r.identity_id for r in reports] == [
        f"{prefix}.coefficients",
        f"{prefix}.term_ratio",
        f"{prefix}.end_to_end",
    ]
    for r in reports:
        assert r.passed, (r.identity_id, r.residual, r.notes)


def test_routes_at_convergent_points():
    for n, k, theta in [(2.7, -0.4, 1.1), (1.9, 0.35, 2.4)]:
        pt = DerivationPoint(n, k, cmath.exp(1j * theta))
        _assert_route_reports(check_sum_path(pt), "sum_path")
        _assert_route_reports(check_diff_path(pt), "diff_path")


def test_routes_at_complex_point():
    pt = DerivationPoint(3.1 + 0.2j, -0.6 + 0.1j, cmath.exp(0.7j))
    _assert_route_reports(check_sum_path(pt), "sum_path")
    _assert_route_reports(check_diff_path(pt), "diff_path")


@given(
    st.floats(1.7, 3.2).filter(lambda n: abs(n - round(n)) >= 0.15),
    off_int_k,
    unit_theta,
)
@settings(max_examples=30)
def test_term_ratio_stage(n, k, theta):
    if abs((k - n) - round(k - n)) < 0.15:
        return  # keep the route prefactor off its zero
    pt = DerivationPoint(n, k, cmath.exp(1j * theta), j_range=10)
    for reports in (check_sum_path(pt), check_diff_path(pt)):
        ratio_report = reports[1]
        assert ratio_report.residual <= ratio_report.tolerance, ratio_report.notes


def test_degenerate_anchor_reports_partials():
    # k - n integer puts the route prefactor on a gamma zero: coefficient
    # comparison turns 0 * inf for far offsets and the end-to-end series
    # violates its convergence gate.  The first two stages still report.
    pt = DerivationPoint(-3.5, -0.5, cmath.exp(1j * 0.8))
    with pytest.raises(DivergenceError) as exc_info:
        check_sum_path(pt)
    partials = exc_info.value.partial_reports
    assert [r.identity_id for r in partials] == [
        "sum_path.coefficients",
        "sum_path.term_ratio",
    ]
    assert "skipped" in partials[0].notes


def test_duplication_routes_agree_with_closed_form():
    rng = random.Random(11)
    for _ in range(10):
        a = rng.uniform(-1.9, -0.1)
        c = a + rng.uniform(1.6, 2.9)
        if abs(c - round(c)) < 0.1 or abs(2 * c - round(2 * c)) < 0.1:
            continue
        z = cmath.exp(1j * rng.uniform(0.2, math.pi))
        via_sum = duplication_from_sum_path(a, c, z)
        via_diff = duplication_from_diff_path(a, c, z)
        direct = cf_duplication(a, c, z)
        assert abs(via_sum - via_diff) / abs(direct) < 1e-10, (a, c, z)
        assert abs(via_sum - direct) / abs(direct) < 1e-10, (a, c, z)


def test_duplication_routes_branch_swap():
    a, c = -0.6, 1.3
    z = cmath.exp(1.9j)
    p = duplication_from_sum_path(a, c, z, BranchChoice.PLUS)
    m = duplication_from_sum_path(a, c, z, BranchChoice.MINUS)
    assert p == m  # the two summands swap places exactly
    p = duplication_from_diff_path(a, c, z, BranchChoice.PLUS)
    m = duplication_from_diff_path(a, c, z, BranchChoice.MINUS)
    assert abs(p - m) <= 1e-15 * abs(p)
