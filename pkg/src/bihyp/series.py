"""Bilateral hypergeometric series on the unit circle.

A bilateral series of order (p, p) sums over all integers,

    H(a; c; z) = sum_{k = -inf}^{inf}  prod_i (a_i)_k / prod_i (c_i)_k  z^k,

with signed Pochhammer symbols, so it is a Laurent-type object: both tails
matter.  On |z| = 1 the terms decay like |k|^(-s) with
s = Re(sum c - sum a), and the series converges (absolutely) only when
s > 1.  That gate is enforced here, and truncation uses the matching
algebraic tail bound rather than a geometric one.

Evaluation sums k = 0 first and then +k/-k pairs outward.  Terms are
generated by the exact two-sided ratio recurrences

    t_{k+1} = t_k * z   prod_i (a_i + k) / prod_i (c_i + k),
    t_{-m}  = t_{-m+1} / z * prod_i (c_i - m) / prod_i (a_i - m),

so no individual Pochhammer value is ever formed (those overflow long
before the ratio does).  The final reduction is an exact Shewchuk
summation over the interleaved terms, making the accumulated value
independent of rounding order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DivergenceError, InvalidParameterError, PoleError

__all__ = [
    "SERIES_INT_TOL",
    "UNIT_MODULUS_TOL",
    "BilateralParams",
    "ConvergenceBudget",
    "SeriesValue",
    "series_term",
    "eval_bilateral",
    "eval_2f1_minus1",
]

# Parameters this close to a bad integer count as sitting on it.
SERIES_INT_TOL = 1e-9
# |z| must sit on the unit circle within this tolerance.
UNIT_MODULUS_TOL = 1e-9

# Truncation half-widths grow geometrically from this base.
_BLOCK_BASE = 64

# eval_2f1_minus1 stops once this many consecutive terms are negligible.
_F21_STOP_STREAK = 3
_F21_STOP_REL = 1e-15
_F21_MAX_TERMS = 20000


def _near_int(w: complex, lo: float | None, hi: float | None, tol: float) -> bool:
    """True when w lies within tol of an integer n with lo <= n <= hi."""
    n = round(w.real)
    if lo is not None and n < lo:
        return False
    if hi is not None and n > hi:
        return False
    return abs(w - n) <= tol


@dataclass(frozen=True)
class BilateralParams:
    """Upper parameters a_list, lower parameters c_list, and unit-circle z."""

    a_list: tuple[complex, ...]
    c_list: tuple[complex, ...]
    z: complex

    def __init__(self, a_list: Sequence[complex], c_list: Sequence[complex], z: complex):
        object.__setattr__(self, "a_list", tuple(complex(a) for a in a_list))
        object.__setattr__(self, "c_list", tuple(complex(c) for c in c_list))
        object.__setattr__(self, "z", complex(z))


@dataclass(frozen=True)
class ConvergenceBudget:
    """Stopping controls for bilateral summation."""

    rel_tol: float = 1e-6
    max_half_width: int = 200_000

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0 and math.isfinite(self.rel_tol)):
            raise InvalidParameterError("ConvergenceBudget.rel_tol must be positive and finite")
        if self.max_half_width < 1:
            raise InvalidParameterError("ConvergenceBudget.max_half_width must be >= 1")


@dataclass(frozen=True)
class SeriesValue:
    """A bilateral sum together with how it was truncated."""

    value: complex
    n_terms: int
    tail_bound: float
    converged: bool


def validate_params(params: BilateralParams) -> None:
    """Raise InvalidParameterError naming the violated constraint, if any."""
    p = len(params.a_list)
    if p != len(params.c_list):
        raise InvalidParameterError("a_list and c_list must have equal length")
    if p not in (1, 2):
        raise InvalidParameterError("series order must be (1,1) or (2,2)")
    for i, a in enumerate(params.a_list):
        if _near_int(a, 1, None, SERIES_INT_TOL):
            raise InvalidParameterError(
                f"a_list[{i}] = {a} is a positive integer within {SERIES_INT_TOL}; "
                "a negative-index term would hit a pole"
            )
    for i, c in enumerate(params.c_list):
        if _near_int(c, None, 0, SERIES_INT_TOL):
            raise InvalidParameterError(
                f"c_list[{i}] = {c} is a nonpositive integer within {SERIES_INT_TOL}; "
                "a positive-index term would hit a pole"
            )
    if abs(abs(params.z) - 1.0) > UNIT_MODULUS_TOL:
        raise InvalidParameterError(
            f"|z| = {abs(params.z)!r} is off the unit circle (tolerance {UNIT_MODULUS_TOL})"
        )


def decay_exponent(params: BilateralParams) -> float:
    """s = Re(sum c - sum a); terms behave like |k|^(-s) in both tails."""
    return (
        sum(c.real for c in params.c_list) - sum(a.real for a in params.a_list)
    )


def series_term(params: BilateralParams, k: int) -> complex:
    """The k-th term prod (a_i)_k / prod (c_i)_k * z^k, either sign of k.

    Numerator and denominator factors are interleaved so that only O(1)
    magnitudes ever appear, and the power z^k is built by repeated
    multiplication with the modulus renormalized to 1 every 64 steps.
    """
    validate_params(params)
    z = params.z / abs(params.z)
    coef: complex = 1.0 + 0j
    power: complex = 1.0 + 0j
    if k >= 0:
        for j in range(k):
            for a, c in zip(params.a_list, params.c_list):
                den = c + j
                if abs(den) == 0.0:
                    raise PoleError(f"series term hits a pole: c + {j} vanishes for c = {c}")
                coef *= (a + j) / den
            power *= z
            if (j + 1) % 64 == 0:
                power /= abs(power)
    else:
        zinv = 1.0 / z
        for j in range(1, -k + 1):
            for a, c in zip(params.a_list, params.c_list):
                den = a - j
                if abs(den) == 0.0:
                    raise PoleError(f"series term hits a pole: a - {j} vanishes for a = {a}")
                coef *= (c - j) / den
            power *= zinv
            if j % 64 == 0:
                power /= abs(power)
    return coef * power


def _extend_terms(
    last: complex,
    start: int,
    stop: int,
    a: np.ndarray,
    c: np.ndarray,
    factor: complex,
    forward: bool,
) -> np.ndarray:
    """Terms for |k| in (start, stop], continuing from the term at |k| = start."""
    if forward:
        j = np.arange(start, stop, dtype=float)
        num = np.ones_like(j, dtype=complex)
        den = np.ones_like(j, dtype=complex)
        for ai in a:
            num *= ai + j
        for ci in c:
            den *= ci + j
    else:
        j = np.arange(start + 1, stop + 1, dtype=float)
        num = np.ones_like(j, dtype=complex)
        den = np.ones_like(j, dtype=complex)
        for ci in c:
            num *= ci - j
        for ai in a:
            den *= ai - j
    ratios = factor * num / den
    return last * np.cumprod(ratios)


def eval_bilateral(
    params: BilateralParams, budget: ConvergenceBudget | None = None
) -> SeriesValue:
    """Sum a bilateral series with symmetric truncation and a tail bound.

    The half-width N doubles geometrically (64, 128, ...) until the
    algebraic tail bound

        tail = max(|t_N|, |t_-N|) * N^s * (2 / (s - 1)) * N^(1 - s)

    drops below rel_tol * |partial sum| or the budget is exhausted.  The
    bound ignores cancellation from oscillating z^k, so on slowly decaying
    series the returned value is routinely far more accurate than
    ``tail_bound`` admits; ``converged`` reports only the bound's verdict.
    """
    if budget is None:
        budget = ConvergenceBudget()
    validate_params(params)
    s = decay_exponent(params)
    if s <= 1.0:
        raise DivergenceError(
            f"bilateral terms decay like |k|^(-{s:.6g}); the sum needs an exponent > 1"
        )
    z = params.z / abs(params.z)
    a = np.array(params.a_list, dtype=complex)
    c = np.array(params.c_list, dtype=complex)

    pos_parts: list[np.ndarray] = []
    neg_parts: list[np.ndarray] = []
    pos_sum = 0j
    neg_sum = 0j
    last_pos: complex = 1.0 + 0j
    last_neg: complex = 1.0 + 0j
    half_width = 0
    tail = math.inf
    converged = False

    while True:
        target = _BLOCK_BASE if half_width == 0 else half_width * 2
        target = min(target, budget.max_half_width)
        pos_block = _extend_terms(last_pos, half_width, target, a, c, z, forward=True)
        neg_block = _extend_terms(last_neg, half_width, target, a, c, 1.0 / z, forward=False)
        pos_parts.append(pos_block)
        neg_parts.append(neg_block)
        pos_sum += pos_block.sum()
        neg_sum += neg_block.sum()
        last_pos = complex(pos_block[-1])
        last_neg = complex(neg_block[-1])
        half_width = target

        # max(|t_N|, |t_-N|) * N^s * (2/(s-1)) * N^(1-s) without forming N^s.
        tail = max(abs(last_pos), abs(last_neg)) * half_width * 2.0 / (s - 1.0)
        partial = 1.0 + pos_sum + neg_sum
        if tail <= budget.rel_tol * abs(partial):
            converged = True
            break
        if half_width >= budget.max_half_width:
            break

    # Exact summation over the interleaved order t_0, t_1, t_-1, t_2, ...
    pos_all = np.concatenate(pos_parts)
    neg_all = np.concatenate(neg_parts)
    merged = np.empty(2 * half_width + 1, dtype=complex)
    merged[0] = 1.0
    merged[1::2] = pos_all
    merged[2::2] = neg_all
    value = complex(math.fsum(merged.real), math.fsum(merged.imag))
    return SeriesValue(value=value, n_terms=half_width, tail_bound=tail, converged=converged)


def eval_2f1_minus1(a: complex, b: complex, c: complex) -> complex:
    """Gauss sum 2F1(a, b; c; -1) via the Pfaff transformation.

    Pfaff maps the alternating argument to 1/2,

        2F1(a, b; c; -1) = 2^(-a) 2F1(a, c - b; c; 1/2),

    where the right side converges geometrically.  Summation stops after
    three consecutive terms fall below 1e-15 of the running sum.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    if _near_int(c, None, 0, SERIES_INT_TOL):
        raise PoleError(f"c = {c} is a nonpositive integer; the series is undefined")
    e = c - b
    term: complex = 1.0 + 0j
    terms = [term]
    running = term
    streak = 0
    k = 0
    while k < _F21_MAX_TERMS:
        den = (c + k) * (k + 1.0)
        if abs(den) == 0.0:
            raise PoleError(f"2F1 term denominator vanishes at k = {k}")
        term *= (a + k) * (e + k) / den * 0.5
        terms.append(term)
        running += term
        k += 1
        if abs(term) < _F21_STOP_REL * max(abs(running), 1e-300):
            streak += 1
            if streak >= _F21_STOP_STREAK:
                break
        else:
            streak = 0
    else:
        raise DivergenceError("2F1(a, b; c; -1) failed to settle within the term budget")
    total = complex(
        math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
    )
    return cmath.exp(-a * math.log(2.0)) * total
