import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyp import (
    BilateralParams,
    ConvergenceBudget,
    DivergenceError,
    InvalidParameterError,
    cf_bilateral_binomial,
    cf_dougall,
    decay_exponent,
    eval_2f1_minus1,
    eval_bilateral,
    kummer_sum,
    series_term,
    validate_params,
)

TIGHT = ConvergenceBudget(rel_tol=1e-8, max_half_width=200_000)


def test_validate_params_rejections():
    z = cmath.exp(1j)
    with pytest.raises(InvalidParameterError):
        validate_params(BilateralParams([-0.5], [1.5, 2.5], z))
    with pytest.raises(InvalidParameterError):
        validate_params(BilateralParams([-0.5, -0.5, -0.5], [1.5, 1.5, 1.5], z))
    with pytest.raises(InvalidParameterError):
        # positive-integer upper parameter: the left tail never dies
        validate_params(BilateralParams([2.0], [3.5], z))
    with pytest.raises(InvalidParameterError):
        # nonpositive-integer lower parameter: a term divides by zero
        validate_params(BilateralParams([-0.5], [0.0], z))
    with pytest.raises(InvalidParameterError):
        validate_params(BilateralParams([-0.5], [1.5], 0.5 * z))


def test_modulus_renormalization_window():
    z = cmath.exp(0.7j)
    for bump in (1.0 + 1e-10, 1.0 - 1e-10):
        out = eval_bilateral(BilateralParams([-0.5], [1.5], bump * z), TIGHT)
        ref = eval_bilateral(BilateralParams([-0.5], [1.5], z), TIGHT)
        assert abs(out.value - ref.value) <= 1e-12 * abs(ref.value)


def test_decay_exponent():
    p = BilateralParams([-0.5, -1.0], [1.5, 2.0], cmath.exp(1j))
    assert decay_exponent(p) == 5.0


def test_series_term_small_orders():
    p = BilateralParams([-1.0], [2.0], 1.0)
    assert series_term(p, 0) == 1.0
    assert abs(series_term(p, 1) - (-0.5)) < 1e-15
    # (a)_{-1} / (c)_{-1} = (c - 1) / (a - 1)
    assert abs(series_term(p, -1) - (-0.5)) < 1e-15


@given(
    st.floats(-1.9, -0.1).filter(lambda a: abs(a - round(a)) > 0.05),
    st.floats(1.6, 2.9),
    st.floats(0.3, 2.8),
)
@settings(max_examples=25)
def test_one_pair_series_matches_closed_form(a, gap, theta):
    c = a + gap
    if abs(c) < 0.05:
        return  # lower parameter would sit on its only reachable pole
    z = cmath.exp(1j * theta)
    got = eval_bilateral(BilateralParams([a], [c], z), TIGHT)
    want = cf_bilateral_binomial(a, c, z)
    assert abs(got.value - want) / abs(want) < 1e-5


def test_two_pair_series_matches_dougall():
    z = cmath.exp(0.0j)
    params = BilateralParams([-1.25, -0.75], [1.5, 2.0], 1.0)
    got = eval_bilateral(params, TIGHT)
    want = cf_dougall(-1.25, -0.75, 1.5, 2.0)
    assert abs(got.value - want) / abs(want) < 1e-6
    assert got.converged


def test_divergence_gate():
    # s = c - a = 1 is not summable
    with pytest.raises(DivergenceError):
        eval_bilateral(BilateralParams([-0.25], [0.75], cmath.exp(1j)))
    with pytest.raises(DivergenceError):
        eval_bilateral(BilateralParams([-0.25], [0.25], cmath.exp(1j)))


def test_tail_bound_reported_when_converged():
    out = eval_bilateral(BilateralParams([-0.5], [2.0], cmath.exp(0.9j)), TIGHT)
    assert out.converged
    assert out.tail_bound <= TIGHT.rel_tol * abs(out.value)
    assert out.n_terms >= 64


def test_budget_refinement_is_consistent():
    p = BilateralParams([-0.7], [1.4], cmath.exp(2.1j))
    coarse = eval_bilateral(p, ConvergenceBudget(rel_tol=1e-4))
    fine = eval_bilateral(p, ConvergenceBudget(rel_tol=1e-9))
    assert abs(coarse.value - fine.value) / abs(fine.value) < 1e-4
    assert fine.n_terms >= coarse.n_terms


def test_2f1_minus1_trivial_points():
    assert eval_2f1_minus1(0.0, 0.7, 0.3) == 1.0
    # b = c reduces to (1 - z)^(-a)
    assert abs(eval_2f1_minus1(1.0, 0.5, 0.5) - 0.5) < 1e-15
    # terminating after the linear term: 1 - 1
    assert eval_2f1_minus1(1.0, 1.5, 0.5) == 0j


def test_2f1_minus1_matches_kummer_sum():
    rng = random.Random(3)
    checked = 0
    while checked < 10:
        a = rng.uniform(-1.8, 0.8)
        b = a - rng.uniform(0.3, 1.1)
        bad = False
        for w in (a - b + 1, a / 2 + 1, a + 1, a / 2 - b + 1, 1 + a - b):
            if abs(w - round(w)) < 0.1:
                bad = True
        if bad:
            continue
        got = eval_2f1_minus1(a, b, 1 + a - b)
        want = kummer_sum(a, b)
        assert abs(got - want) / abs(want) < 1e-9, (a, b)
        checked += 1
