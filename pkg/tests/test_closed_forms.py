import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyp import (
    BilateralParams,
    BranchChoice,
    BranchCutError,
    ConvergenceBudget,
    GammaBracket,
    InvalidParameterError,
    cf_bilateral_binomial,
    cf_dougall,
    cf_duplication,
    cf_minus_one,
    cf_unit_value,
    eval_bilateral,
    gamma_bracket,
    kummer_half,
    kummer_half_trig,
    kummer_sum,
)

PI_4 = math.pi / 4.0


def _off_ints(*ws: complex, margin: float = 0.1) -> bool:
    return all(abs(w - round(w.real)) >= margin for w in map(complex, ws))


ac_pairs = st.tuples(
    st.floats(-1.9, -0.1), st.floats(1.55, 2.95)
).filter(
    lambda t: _off_ints(t[0], t[0] + t[1], 2 * (t[0] + t[1]), 2 * t[0])
)


def test_unit_value_quarter_pi():
    got = cf_unit_value(0.25, 0.75)
    assert abs(got - PI_4) / PI_4 < 1e-12


@given(ac_pairs)
def test_unit_value_is_half_step_dougall(t):
    a, gap = t
    c = a + gap
    lhs = cf_unit_value(a, c)
    rhs = cf_dougall(a, a + 0.5, c, c + 0.5)
    assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_unit_value_complex_point():
    a, c = -0.85 + 0.3j, 1.05 - 0.12j
    lhs = cf_unit_value(a, c)
    rhs = cf_dougall(a, a + 0.5, c, c + 0.5)
    assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_dougall_fixed_point():
    got = cf_dougall(-1.25, -0.75, 1.5, 2.0)
    assert abs(got - 1.4366613966964774) / 1.4366613966964774 < 1e-12


def test_dougall_denominator_pole_is_zero():
    # c = a makes Gamma(c - a) blow up downstairs: the value vanishes.
    assert cf_dougall(-1.25, -0.75, -1.25, 2.0) == 0j


def test_bilateral_binomial_guards():
    with pytest.raises(InvalidParameterError):
        cf_bilateral_binomial(-0.5, 1.25, 0.0)
    with pytest.raises(InvalidParameterError):
        cf_bilateral_binomial(-0.5, 1.25, 1.0)
    # -z on the negative real axis with a non-integer exponent
    with pytest.raises(BranchCutError):
        cf_bilateral_binomial(-0.5, 1.25, 0.5)
    # ... but an integer exponent never sees the cut
    val = cf_bilateral_binomial(-0.5, 2.0, 0.5)
    assert math.isfinite(abs(val))


def test_duplication_guards():
    with pytest.raises(InvalidParameterError):
        cf_duplication(-0.75, 1.25, 0.0)
    with pytest.raises(InvalidParameterError):
        cf_duplication(-0.75, 1.25, 1.0)


@given(
    ac_pairs,
    st.floats(0.2, math.pi),
)
def test_duplication_branch_independence(t, theta):
    a, gap = t
    c = a + gap
    z = cmath.exp(1j * theta)
    plus = cf_duplication(a, c, z, BranchChoice.PLUS)
    minus = cf_duplication(a, c, z, BranchChoice.MINUS)
    assert abs(plus - minus) <= 1e-12 * abs(plus)


def test_duplication_against_series_complex_parameters():
    a, c = -0.85 + 0.3j, 1.05 - 0.12j
    z = cmath.exp(2.2j)
    closed = cf_duplication(a, c, z)
    series = eval_bilateral(
        BilateralParams([a, a + 0.5], [c, c + 0.5], z),
        ConvergenceBudget(rel_tol=1e-8),
    )
    assert abs(series.value - closed) / abs(closed) < 1e-6


def test_minus_one_fixed_points():
    for a, c, want in [
        (-1.25, 2.25, 0.30371270085066937 + 0j),
        (-0.6, 1.1, 0.9355164871339021 + 0j),
        (-0.35 + 0.2j, 1.4 - 0.1j, 0.7197763598093784 + 0.013901682973382096j),
    ]:
        got = cf_minus_one(a, c)
        assert abs(got - want) / abs(want) < 1e-12, (a, c)


@given(ac_pairs)
def test_minus_one_agrees_with_duplication(t):
    a, gap = t
    c = a + gap
    if abs(cmath.cos((2 * c + 2 * a - 1) * PI_4)) < 0.05:
        return  # value near a zero: relative error is meaningless there
    lhs = cf_minus_one(a, c)
    rhs = cf_duplication(a, c, -1.0)
    assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_minus_one_against_series():
    a, c = -1.25, 2.25
    series = eval_bilateral(
        BilateralParams([a, a + 0.5], [c, c + 0.5], -1.0),
        ConvergenceBudget(rel_tol=1e-8),
    )
    assert abs(series.value - cf_minus_one(a, c)) / abs(series.value) < 1e-6


def test_minus_one_collapses_to_kummer_at_half():
    # c = 1/2 empties the gamma quotient and leaves 2^(-a) cos(pi a / 2).
    for a in (-1.3, -0.45, 0.35):
        lhs = cf_minus_one(a, 0.5)
        rhs = kummer_half_trig(a)
        assert abs(lhs - rhs) <= 1e-14 * max(abs(rhs), 1.0), a


def _minus_one_wrong_exponent(a: complex, c: complex) -> complex:
    # Same gamma quotient and cosine, binary exponent lowered by one.
    bracket = gamma_bracket(GammaBracket([2 * c, 1 - 2 * a], [2 * c - 2 * a]))
    return (
        bracket
        * cmath.exp((c - a - 1.5) * math.log(2.0))
        * cmath.cos((2 * c + 2 * a - 1) * PI_4)
    )


@given(ac_pairs)
def test_minus_one_negative_control(t):
    # The halved-exponent variant must NOT pass: it lands at exactly half
    # the duplication value, a relative error of 0.5.
    a, gap = t
    c = a + gap
    if abs(cmath.cos((2 * c + 2 * a - 1) * PI_4)) < 0.05:
        return
    wrong = _minus_one_wrong_exponent(a, c)
    right = cf_duplication(a, c, -1.0)
    rel = abs(wrong - right) / abs(right)
    assert rel > 1e-3, "wrong exponent would slip through the tolerance"
    assert abs(rel - 0.5) < 1e-10


def test_kummer_chain_trivial_endpoints():
    assert kummer_sum(0.0, 0.5) == 1.0 + 0j
    assert kummer_half(0.0) == 1.0 + 0j
    assert kummer_sum(1.0, 1.5) == 0j
    assert kummer_half(1.0) == 0j
    assert abs(kummer_half_trig(0.0) - 1.0) < 1e-15
    assert abs(kummer_half_trig(1.0)) < 1e-15


def test_kummer_sum_quarter_pi():
    assert abs(kummer_sum(1.0, 0.5) - PI_4) / PI_4 < 1e-14


@given(
    st.floats(-1.9, 0.9).filter(
        lambda a: _off_ints(a) and abs(a - 1) >= 0.1 and abs(a + 1) >= 0.1
    )
)
def test_kummer_half_matches_trig(a):
    lhs = kummer_half(a)
    rhs = kummer_half_trig(a)
    assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1e-3)
