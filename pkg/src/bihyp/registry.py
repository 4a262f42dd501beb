"""Identity registry: every cross-check the verify suite knows how to run.

Each identity owns a seeded sampler over its validity domain (margins keep
every gamma argument, power base, and cosine factor safely away from the
degenerate sets) and a runner that turns one sampled point into a residual.
Identities whose check aggregates sub-residuals with different budgets
(the route checks, the Pascal-plane pair) report the normalized residual
max_i(res_i / tol_i) against tolerance 1.0.

Per-identity RNG streams are derived as Random(f"{seed}:{identity_id}"),
so adding or filtering identities never shifts another identity's points.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

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
from .derivations import DerivationPoint, check_diff_path, check_sum_path
from .errors import BihypError, InvalidParameterError
from .gammafn import legendre_residual
from .pascal_plane import PlanePoint, binom
from .reports import SuiteConfig, VerificationReport
from .series import BilateralParams, ConvergenceBudget, eval_2f1_minus1, eval_bilateral

__all__ = ["Identity", "REGISTRY", "registry_ids", "run_suite"]

_TINY = 1e-300

# margin keeping sampled values away from integers / zeros of cosines
_MARGIN = 0.05


@dataclass(frozen=True)
class Identity:
    identity_id: str
    description: str
    tolerance: float
    sample: Callable[[random.Random, SuiteConfig], dict]
    run: Callable[[dict, SuiteConfig], tuple[float, int | None, str]]


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def _budget(config: SuiteConfig) -> ConvergenceBudget:
    return ConvergenceBudget(rel_tol=config.rel_tol, max_half_width=config.max_half_width)


def _off_integers(rng: random.Random, lo: float, hi: float, margin: float = _MARGIN) -> float:
    while True:
        x = rng.uniform(lo, hi)
        if abs(x - round(x)) >= margin:
            return x


def _sample_ac(rng: random.Random) -> tuple[float, float]:
    """a in (-2, 0) off integers, c = a + [1.5, 3] with c and 2c off the
    nonpositive integers (keeps every downstream gamma argument regular)."""
    while True:
        a = _off_integers(rng, -2.0, 0.0)
        c = a + rng.uniform(1.5, 3.0)
        if abs(c - round(c)) < _MARGIN and round(c) <= 0:
            continue
        if abs(2.0 * c - round(2.0 * c)) < 2.0 * _MARGIN and round(2.0 * c) <= 0:
            continue
        return a, c


def _unit_z(rng: random.Random, lo: float = 0.2, hi: float = math.pi) -> complex:
    theta = rng.uniform(lo, hi)
    return complex(math.cos(theta), math.sin(theta))


# --- eq2: order (2,2) series at z = 1 vs the five-over-four gamma bracket


def _sample_dougall(rng: random.Random, config: SuiteConfig) -> dict:
    while True:
        a = _off_integers(rng, -1.5, -0.1)
        b = _off_integers(rng, -1.5, -0.1)
        c = _off_integers(rng, 0.5, 1.5)
        # place d so the decay exponent s = c + d - a - b lands in [2.5, 3.5]
        d = rng.uniform(2.5, 3.5) - c + a + b
        ok = True
        for w in (c, d, 1.0 - a, 1.0 - b, c + d - a - b - 1.0, c - a, d - a, c - b, d - b):
            if abs(w - round(w)) < _MARGIN and round(w) <= 0:
                ok = False
                break
        if ok:
            return {"a": a, "b": b, "c": c, "d": d}


def _run_dougall(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, b, c, d = point["a"], point["b"], point["c"], point["d"]
    sv = eval_bilateral(BilateralParams((a, b), (c, d), 1.0), _budget(config))
    cv = cf_dougall(a, b, c, d)
    return _rel(sv.value, cv), sv.n_terms, f"converged={sv.converged}"


# --- eq3: order (1,1) series vs its two-power closed form


def _sample_eq3(rng: random.Random, config: SuiteConfig) -> dict:
    a, c = _sample_ac(rng)
    return {"a": a, "c": c, "z": _unit_z(rng)}


def _run_eq3(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, c, z = point["a"], point["c"], point["z"]
    sv = eval_bilateral(BilateralParams((a,), (c,), z), _budget(config))
    cv = cf_bilateral_binomial(a, c, z)
    return _rel(sv.value, cv), sv.n_terms, f"converged={sv.converged}"


# --- eq4: Pascal-plane anchor points (integer triangle + alternating row)


def _sample_eq4(rng: random.Random, config: SuiteConfig) -> dict:
    n = rng.randint(0, 12)
    return {"n": n, "k": rng.randint(-2, n + 2), "k_neg_row": rng.randint(0, 10)}


def _run_eq4(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    n = int(point["n"].real)
    k = int(point["k"].real)
    k_row = int(point["k_neg_row"].real)
    exact = float(math.comb(n, k)) if 0 <= k <= n else 0.0
    res_tri = abs(binom(PlanePoint(n, k)) - exact)
    res_row = abs(binom(PlanePoint(-1.0, k_row)) - (-1.0) ** k_row)
    residual = max(res_tri / 1e-9, res_row / 1e-6)
    worst = "triangle" if res_tri / 1e-9 >= res_row / 1e-6 else "alternating row"
    return residual, None, f"normalized; worst sub-check: {worst}"


# --- eq11 / eq18: the two derivation routes (three staged sub-checks each)


def _sample_route(rng: random.Random, config: SuiteConfig) -> dict:
    while True:
        n = _off_integers(rng, 1.7, 3.2)
        k = _off_integers(rng, -0.8, 0.8)
        if abs((k - n) - round(k - n)) < _MARGIN:
            continue
        return {"n": n, "k": k, "z": _unit_z(rng, 0.2, math.pi - 0.2)}


def _route_runner(checker) -> Callable[[dict, SuiteConfig], tuple[float, int | None, str]]:
    def run(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
        pt = DerivationPoint(n=point["n"], k=point["k"], z=point["z"], j_range=20)
        reps = checker(pt)
        residual = max(r.residual / r.tolerance for r in reps)
        worst = max(reps, key=lambda r: r.residual / r.tolerance)
        n_terms = next((r.n_terms_used for r in reps if r.n_terms_used is not None), None)
        return residual, n_terms, f"normalized; worst sub-check: {worst.identity_id}"

    return run


# --- eq12: half-step series vs closed form, and branch independence


def _sample_eq12(rng: random.Random, config: SuiteConfig) -> dict:
    a, c = _sample_ac(rng)
    return {"a": a, "c": c, "z": _unit_z(rng)}


def _run_eq12_series(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, c, z = point["a"], point["c"], point["z"]
    sv = eval_bilateral(BilateralParams((a, a + 0.5), (c, c + 0.5), z), _budget(config))
    cv = cf_duplication(a, c, z)
    return _rel(sv.value, cv), sv.n_terms, f"converged={sv.converged}"


def _run_eq12_branch(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, c, z = point["a"], point["c"], point["z"]
    plus = cf_duplication(a, c, z, BranchChoice.PLUS)
    minus = cf_duplication(a, c, z, BranchChoice.MINUS)
    return _rel(plus, minus), None, "plus vs minus square root"


# --- eq19: z = 1 limit against Dougall's bracket


def _sample_ac_only(rng: random.Random, config: SuiteConfig) -> dict:
    a, c = _sample_ac(rng)
    return {"a": a, "c": c}


def _run_eq19(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, c = point["a"], point["c"]
    return _rel(cf_unit_value(a, c), cf_dougall(a, a + 0.5, c, c + 0.5)), None, ""


# --- eq23: z = -1 value against the duplication bracket at z = -1


def _sample_eq23(rng: random.Random, config: SuiteConfig) -> dict:
    while True:
        a, c = _sample_ac(rng)
        if abs(math.cos((2.0 * c.real + 2.0 * a.real - 1.0) * math.pi / 4.0)) >= _MARGIN:
            return {"a": a, "c": c}


def _run_eq23(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a, c = point["a"], point["c"]
    return _rel(cf_minus_one(a, c), cf_duplication(a, c, -1.0)), None, ""


# --- eq24: c = 1/2 collapses the half-step series to a one-sided 2F1 at -1


def _sample_eq24(rng: random.Random, config: SuiteConfig) -> dict:
    # lower pair is fixed at (1/2, 1); only a needs guarding, and keeping
    # a <= -0.15 keeps the decay exponent 1 - 2a comfortably above 1
    return {"a": _off_integers(rng, -1.95, -0.15)}


def _run_eq24(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a = point["a"]
    sv = eval_bilateral(BilateralParams((a, a + 0.5), (0.5, 1.0), -1.0), _budget(config))
    f21 = eval_2f1_minus1(a, a + 0.5, 0.5)
    kh = kummer_half(a)
    residual = max(_rel(sv.value, f21), _rel(f21, kh))
    return residual, sv.n_terms, f"series vs 2F1(-1) vs gamma bracket; converged={sv.converged}"


# --- eq26: Kummer chain (bracket forms, 2F1 evaluation, trig form)


def _sample_eq26(rng: random.Random, config: SuiteConfig) -> dict:
    while True:
        a = _off_integers(rng, -2.0, 1.0)
        if abs(a - 1.0) < 2 * _MARGIN or abs(a + 1.0) < 2 * _MARGIN:
            continue
        return {"a": a}


def _run_eq26(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    a = point["a"]
    k1 = kummer_sum(a, a + 0.5)
    k2 = kummer_half(a)
    k3 = kummer_half_trig(a)
    f = eval_2f1_minus1(a, a + 0.5, 0.5)
    residual = max(_rel(k1, k2), _rel(k2, k3), _rel(k3, f))
    return residual, None, "kummer_sum ~ kummer_half ~ trig form ~ 2F1(-1)"


# --- legendre: gamma-core duplication self-test


def _sample_legendre(rng: random.Random, config: SuiteConfig) -> dict:
    while True:
        z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        try:
            legendre_residual(z)
        except BihypError:
            continue
        return {"z": z}


def _run_legendre(point: dict, config: SuiteConfig) -> tuple[float, int | None, str]:
    return legendre_residual(point["z"]), None, ""


REGISTRY: tuple[Identity, ...] = (
    Identity(
        "eq2_series_vs_closed",
        "order (2,2) bilateral series at z=1 equals the five-over-four gamma bracket",
        # the engine stops once its tail estimate reaches rel_tol, so the
        # pass budget needs headroom above the default 1e-6 stopping target
        1e-5,
        _sample_dougall,
        _run_dougall,
    ),
    Identity(
        "eq3_series_vs_closed",
        "order (1,1) bilateral series equals its two-power closed form on the unit circle",
        1e-5,
        _sample_eq3,
        _run_eq3,
    ),
    Identity(
        "eq4_pascal_plane",
        "plane binomial reproduces the integer triangle and the alternating row at x=-1",
        1.0,
        _sample_eq4,
        _run_eq4,
    ),
    Identity(
        "eq11_sum_path",
        "sum route: cancellation, coefficients, term ratios, end-to-end series",
        1.0,
        _sample_route,
        _route_runner(check_sum_path),
    ),
    Identity(
        "eq18_diff_path",
        "difference route: cancellation, coefficients, term ratios, end-to-end series",
        1.0,
        _sample_route,
        _route_runner(check_diff_path),
    ),
    Identity(
        "eq12_series_vs_closed",
        "half-step (2,2) series equals the square-root closed form",
        1e-5,
        _sample_eq12,
        _run_eq12_series,
    ),
    Identity(
        "eq12_branch_independence",
        "both square-root branches give the same closed-form value",
        1e-12,
        _sample_eq12,
        _run_eq12_branch,
    ),
    Identity(
        "eq19_vs_eq2",
        "z=1 limit of the half-step sum matches Dougall's bracket",
        1e-12,
        _sample_ac_only,
        _run_eq19,
    ),
    Identity(
        "eq23_vs_eq12_at_minus1",
        "z=-1 cosine form matches the duplication bracket at z=-1",
        1e-12,
        _sample_eq23,
        _run_eq23,
    ),
    Identity(
        "eq24_reduction",
        "c=1/2 half-step series at z=-1 collapses to 2F1(a, a+1/2; 1/2; -1)",
        1e-5,
        _sample_eq24,
        _run_eq24,
    ),
    Identity(
        "eq26_kummer_chain",
        "Kummer value: bracket forms, 2F1 evaluation and trig form all agree",
        1e-9,
        _sample_eq26,
        _run_eq26,
    ),
    Identity(
        "legendre_selftest",
        "gamma duplication residual vanishes across the sampled plane",
        1e-12,
        _sample_legendre,
        _run_legendre,
    ),
)

_BY_ID = {ident.identity_id: ident for ident in REGISTRY}


def registry_ids() -> tuple[str, ...]:
    return tuple(ident.identity_id for ident in REGISTRY)


def run_suite(config: SuiteConfig) -> list[VerificationReport]:
    """Run every (selected) identity at sample_count seeded points.

    Failures never abort the suite: a point whose evaluation raises is
    recorded as a failed report with an infinite residual and the error in
    the notes.  Output order is registry order, then sample order, so equal
    configs give byte-identical report streams downstream.
    """
    selected = REGISTRY
    if config.identity_filter is not None:
        unknown = [i for i in config.identity_filter if i not in _BY_ID]
        if unknown:
            raise InvalidParameterError(
                f"unknown identity ids: {', '.join(unknown)}; "
                f"known: {', '.join(registry_ids())}"
            )
        selected = tuple(i for i in REGISTRY if i.identity_id in config.identity_filter)
    out: list[VerificationReport] = []
    for ident in selected:
        rng = random.Random(f"{config.rng_seed}:{ident.identity_id}")
        for _ in range(config.sample_count):
            point = ident.sample(rng, config)
            try:
                residual, n_terms, notes = ident.run(point, config)
            except (BihypError, OverflowError, ZeroDivisionError) as exc:
                residual = float("inf")
                n_terms = None
                notes = f"{type(exc).__name__}: {exc}"
            out.append(
                VerificationReport(
                    identity_id=ident.identity_id,
                    parameter_point=point,
                    residual=residual,
                    tolerance=ident.tolerance,
                    n_terms_used=n_terms,
                    notes=notes,
                )
            )
    return out
