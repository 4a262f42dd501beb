import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bihyp import (
    InvalidParameterError,
    LimitDivergesError,
    PlanePoint,
    PoleError,
    binom,
    binom_row_ratio,
)


def test_classical_triangle():
    for n in range(13):
        for k in range(n + 1):
            expected = math.comb(n, k)
            got = binom(PlanePoint(n, k))
            assert abs(got - expected) <= 1e-9 * max(1.0, expected), (n, k)


def test_zero_wedges_beside_the_triangle():
    # Right of the row and at negative integer columns of nonnegative rows
    # the 1/Gamma factors kill the value exactly.
    assert binom(PlanePoint(3, 5)) == 0j
    assert binom(PlanePoint(3, -2)) == 0j
    assert binom(PlanePoint(2.5, -1)) == 0j


def test_alternating_row_minus_one():
    for k in range(11):
        got = binom(PlanePoint(-1, k))
        assert abs(got - (-1) ** k) < 1e-6, k


def test_double_pole_limits():
    # Both a numerator and a denominator pole: the value is a limit along
    # the diagonal.  (-1, -1) tends to 1, (-2, -1) to 0.
    assert abs(binom(PlanePoint(-1, -1)) - 1) < 1e-6
    assert abs(binom(PlanePoint(-2, -1))) < 1e-6
    assert abs(binom(PlanePoint(-3, -3)) - 1) < 1e-6


def test_numerator_only_pole_diverges():
    with pytest.raises(LimitDivergesError):
        binom(PlanePoint(-2, 0.5))


def test_plain_complex_point_symmetry():
    # binom(x, y) = binom(x, x - y) when no gamma factor is at a pole.
    p = PlanePoint(2.3 + 0.4j, 0.7 - 0.2j)
    q = PlanePoint(p.x, p.x - p.y)
    a, b = binom(p), binom(q)
    assert abs(a - b) / abs(a) < 1e-13


off_int = st.floats(-4.0, 4.0, allow_nan=False).filter(
    lambda t: abs(t - round(t)) >= 0.1
)


@given(off_int, off_int, st.integers(min_value=-3, max_value=3))
def test_row_ratio_matches_binom_quotient(n, k, step):
    # The product form must reproduce the quotient of two independent
    # bracket evaluations wherever everything is finite and nonzero.
    if step == 0:
        return
    if abs((n - k) - round(n - k)) < 0.1:
        return  # keep binom well away from its zero wedge
    num = binom(PlanePoint(n, k + step))
    den = binom(PlanePoint(n, k))
    if abs(den) < 1e-12 or abs(num) < 1e-12:
        return
    ratio = binom_row_ratio(n, k, step)
    assert abs(ratio - num / den) / abs(num / den) < 1e-10


def test_row_ratio_single_steps():
    # binom(3, k+1)/binom(3, k) = (3 - k)/(k + 1)
    assert abs(binom_row_ratio(3.0, 1.0, 1) - 1.0) < 1e-15
    assert abs(binom_row_ratio(3.0, 0.0, 1) - 3.0) < 1e-15
    assert abs(binom_row_ratio(3.0, 1.0, -1) - 1.0 / 3.0) < 1e-15


def test_row_ratio_guards():
    with pytest.raises(InvalidParameterError):
        binom_row_ratio(3.0, 1.0, 0.5)
    with pytest.raises(PoleError):
        # stepping across k = -1 divides by k + 1 = 0
        binom_row_ratio(3.0, -1.0, 1)
