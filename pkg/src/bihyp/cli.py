"""Command-line front end: evaluate series and closed forms, run the
verification suite, sweep parameter grids.

Complex inputs arrive as flag pairs --<name>-re / --<name>-im (imaginary
part optional, defaulting to 0), which sidesteps locale-dependent complex
literal parsing.  All numeric output uses 17 significant digits so equal
configurations produce byte-identical streams.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error, 3 mathematical domain error (pole, divergence, branch cut, or an
overflowing magnitude).
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

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
from .errors import (
    BranchCutError,
    DivergenceError,
    InvalidParameterError,
    LimitDivergesError,
    PoleError,
)
from .gammafn import gamma
from .pascal_plane import PlanePoint, binom
from .registry import registry_ids, run_suite
from .reports import SuiteConfig, VerificationReport
from .series import BilateralParams, ConvergenceBudget, SeriesValue, eval_2f1_minus1, eval_bilateral

__all__ = ["main"]

_MATH_ERRORS = (PoleError, DivergenceError, BranchCutError, LimitDivergesError, OverflowError)

_FLAG_RE = re.compile(r"^--([A-Za-z][A-Za-z0-9_]*)-(re|im)(?:=(.*))?$")


def _g17(x: float) -> str:
    return f"{float(x):.17g}"


def _json_num(x: float | None) -> str:
    if x is None:
        return "null"
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return "null"
    return _g17(x)


def _complex_str(v: complex) -> str:
    sign = "+" if v.imag >= 0 else "-"
    return f"{_g17(v.real)}{sign}{_g17(abs(v.imag))}j"


@dataclass(frozen=True)
class Target:
    kind: str  # "series" or "closed"
    params: tuple[str, ...]
    takes_branch: bool
    fn: Callable


def _series_h11(p: dict, budget: ConvergenceBudget, branch: BranchChoice) -> SeriesValue:
    return eval_bilateral(BilateralParams((p["a"],), (p["c"],), p["z"]), budget)


def _series_h22(p: dict, budget: ConvergenceBudget, branch: BranchChoice) -> SeriesValue:
    return eval_bilateral(
        BilateralParams((p["a"], p["b"]), (p["c"], p["d"]), p["z"]), budget
    )


TARGETS: dict[str, Target] = {
    "h11": Target("series", ("a", "c", "z"), False, _series_h11),
    "h22": Target("series", ("a", "b", "c", "d", "z"), False, _series_h22),
    "cf_bilateral_binomial": Target(
        "closed", ("a", "c", "z"), False, lambda p, b, br: cf_bilateral_binomial(p["a"], p["c"], p["z"])
    ),
    "cf_duplication": Target(
        "closed", ("a", "c", "z"), True, lambda p, b, br: cf_duplication(p["a"], p["c"], p["z"], br)
    ),
    "cf_dougall": Target(
        "closed", ("a", "b", "c", "d"), False, lambda p, b, br: cf_dougall(p["a"], p["b"], p["c"], p["d"])
    ),
    "cf_unit_value": Target(
        "closed", ("a", "c"), False, lambda p, b, br: cf_unit_value(p["a"], p["c"])
    ),
    "cf_minus_one": Target(
        "closed", ("a", "c"), False, lambda p, b, br: cf_minus_one(p["a"], p["c"])
    ),
    "kummer_sum": Target(
        "closed", ("a", "b"), False, lambda p, b, br: kummer_sum(p["a"], p["b"])
    ),
    "kummer_half": Target("closed", ("a",), False, lambda p, b, br: kummer_half(p["a"])),
    "kummer_half_trig": Target(
        "closed", ("a",), False, lambda p, b, br: kummer_half_trig(p["a"])
    ),
    "2f1_minus1": Target(
        "closed", ("a", "b", "c"), False, lambda p, b, br: eval_2f1_minus1(p["a"], p["b"], p["c"])
    ),
    "binom": Target(
        "closed", ("x", "y"), False, lambda p, b, br: binom(PlanePoint(p["x"], p["y"]))
    ),
    "gamma": Target("closed", ("z",), False, lambda p, b, br: gamma(p["z"])),
}


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _parse_param_flags(extras: Sequence[str], allowed: tuple[str, ...]) -> dict[str, complex]:
    """Turn leftover --name-re/--name-im flags into a complex-valued dict."""
    parts: dict[str, dict[str, float]] = {}
    tokens = list(extras)
    i = 0
    while i < len(tokens):
        m = _FLAG_RE.match(tokens[i])
        if not m:
            raise InvalidParameterError(f"unrecognized argument {tokens[i]!r}")
        name, comp, inline = m.group(1), m.group(2), m.group(3)
        if inline is None:
            if i + 1 >= len(tokens):
                raise InvalidParameterError(f"flag --{name}-{comp} is missing a value")
            inline = tokens[i + 1]
            i += 2
        else:
            i += 1
        if name not in allowed:
            raise InvalidParameterError(
                f"unknown parameter {name!r}; this target takes: {', '.join(allowed)}"
            )
        try:
            value = float(inline)
        except ValueError:
            raise InvalidParameterError(f"--{name}-{comp} expects a number, got {inline!r}")
        parts.setdefault(name, {})[comp] = value
    out: dict[str, complex] = {}
    for name in allowed:
        got = parts.get(name)
        if got is None or "re" not in got:
            raise InvalidParameterError(f"missing required flag --{name}-re")
        out[name] = complex(got["re"], got.get("im", 0.0))
    return out


def _branch_of(args) -> BranchChoice:
    return BranchChoice.MINUS if getattr(args, "branch", "plus") == "minus" else BranchChoice.PLUS


def _cmd_eval(args, extras: Sequence[str]) -> int:
    target = TARGETS.get(args.target)
    if target is None or target.kind != args.kind:
        names = ", ".join(sorted(n for n, t in TARGETS.items() if t.kind == args.kind))
        return _usage_error(
            f"unknown {args.kind} target {args.target!r}; available: {names}"
        )
    try:
        params = _parse_param_flags(extras, target.params)
    except InvalidParameterError as exc:
        return _usage_error(str(exc))
    budget = ConvergenceBudget(rel_tol=args.rel_tol, max_half_width=args.max_half_width)
    try:
        result = target.fn(params, budget, _branch_of(args))
    except InvalidParameterError as exc:
        return _usage_error(str(exc))
    except _MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    if isinstance(result, SeriesValue):
        print(f"re = {_g17(result.value.real)}")
        print(f"im = {_g17(result.value.imag)}")
        print(f"n_terms = {result.n_terms}")
        print(f"tail_bound = {_g17(result.tail_bound)}")
        print(f"converged = {'true' if result.converged else 'false'}")
    else:
        value = complex(result)
        print(f"re = {_g17(value.real)}")
        print(f"im = {_g17(value.imag)}")
    return 0


def _report_json_line(r: VerificationReport) -> str:
    point = ",".join(
        f"{json.dumps(name)}:[{_g17(v.real)},{_g17(v.imag)}]"
        for name, v in r.parameter_point.items()
    )
    fields = [
        '"type":"report"',
        f'"identity_id":{json.dumps(r.identity_id)}',
        f'"point":{{{point}}}',
        f'"residual":{_json_num(r.residual)}',
        f'"tolerance":{_json_num(r.tolerance)}',
        f'"passed":{"true" if r.passed else "false"}',
        f'"n_terms_used":{r.n_terms_used if r.n_terms_used is not None else "null"}',
        f'"notes":{json.dumps(r.notes)}',
    ]
    return "{" + ",".join(fields) + "}"


def _point_csv(point: dict) -> str:
    return ";".join(f"{name}={_complex_str(v)}" for name, v in point.items())


def _cmd_verify(args, extras: Sequence[str]) -> int:
    if extras:
        return _usage_error(f"unrecognized arguments: {' '.join(extras)}")
    try:
        config = SuiteConfig(
            rel_tol=args.rel_tol,
            max_half_width=args.max_half_width,
            sample_count=args.samples,
            rng_seed=args.seed,
            identity_filter=tuple(args.identity) if args.identity else None,
        )
        reports = run_suite(config)
    except InvalidParameterError as exc:
        return _usage_error(str(exc))
    passed = sum(1 for r in reports if r.passed)
    failed = len(reports) - passed
    if args.format == "jsonl":
        for r in reports:
            print(_report_json_line(r))
        print(f'{{"type":"summary","total":{len(reports)},"passed":{passed},"failed":{failed}}}')
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["identity_id", "point", "residual", "tolerance", "passed", "n_terms_used", "notes"]
        )
        for r in reports:
            writer.writerow(
                [
                    r.identity_id,
                    _point_csv(r.parameter_point),
                    _g17(r.residual),
                    _g17(r.tolerance),
                    "true" if r.passed else "false",
                    "" if r.n_terms_used is None else r.n_terms_used,
                    r.notes,
                ]
            )
        sys.stdout.write(buf.getvalue())
        print(f"# total={len(reports)} passed={passed} failed={failed}")
    return 0 if failed == 0 else 1


def _cmd_sweep(args, extras: Sequence[str]) -> int:
    target = TARGETS.get(args.target)
    if target is None:
        return _usage_error(
            f"unknown target {args.target!r}; available: {', '.join(sorted(TARGETS))}"
        )
    if args.steps < 2:
        return _usage_error("sweep needs --steps >= 2")
    var = args.var
    if var == "theta":
        if "z" not in target.params:
            return _usage_error(f"target {args.target!r} has no z parameter to sweep over theta")
        fixed_names = tuple(p for p in target.params if p != "z")
    elif var in target.params:
        fixed_names = tuple(p for p in target.params if p != var)
    else:
        return _usage_error(
            f"--var must be 'theta' or one of this target's parameters ({', '.join(target.params)})"
        )
    try:
        fixed = _parse_param_flags(extras, fixed_names)
    except InvalidParameterError as exc:
        return _usage_error(str(exc))
    budget = ConvergenceBudget(rel_tol=args.rel_tol, max_half_width=args.max_half_width)
    branch = _branch_of(args)

    is_series = target.kind == "series"
    rows: list[dict] = []
    succeeded = 0
    for i in range(args.steps):
        t = args.start + (args.stop - args.start) * i / (args.steps - 1)
        params = dict(fixed)
        if var == "theta":
            params["z"] = complex(math.cos(t), math.sin(t))
        else:
            params[var] = complex(t, 0.0)
        row: dict = {"value": t}
        try:
            result = target.fn(params, budget, branch)
        except (InvalidParameterError, *_MATH_ERRORS) as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        else:
            succeeded += 1
            if isinstance(result, SeriesValue):
                row.update(
                    re=result.value.real,
                    im=result.value.imag,
                    n_terms=result.n_terms,
                    tail_bound=result.tail_bound,
                    converged=result.converged,
                )
            else:
                value = complex(result)
                row.update(re=value.real, im=value.imag)
        rows.append(row)

    header = [var, "re", "im"] + (["n_terms", "tail_bound", "converged"] if is_series else []) + ["error"]
    if args.format == "jsonl":
        for row in rows:
            fields = [f'"type":"row"', f'"{var}":{_g17(row["value"])}']
            fields.append(f'"re":{_json_num(row.get("re"))}')
            fields.append(f'"im":{_json_num(row.get("im"))}')
            if is_series:
                n = row.get("n_terms")
                fields.append(f'"n_terms":{n if n is not None else "null"}')
                fields.append(f'"tail_bound":{_json_num(row.get("tail_bound"))}')
                conv = row.get("converged")
                fields.append(f'"converged":{"null" if conv is None else ("true" if conv else "false")}')
            err = row.get("error")
            fields.append(f'"error":{json.dumps(err) if err else "null"}')
            print("{" + ",".join(fields) + "}")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            record = [_g17(row["value"])]
            record.append("" if row.get("re") is None else _g17(row["re"]))
            record.append("" if row.get("im") is None else _g17(row["im"]))
            if is_series:
                record.append("" if row.get("n_terms") is None else row["n_terms"])
                record.append("" if row.get("tail_bound") is None else _g17(row["tail_bound"]))
                conv = row.get("converged")
                record.append("" if conv is None else ("true" if conv else "false"))
            record.append(row.get("error", ""))
            writer.writerow(record)
        sys.stdout.write(buf.getvalue())
    return 0 if succeeded > 0 else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihyp",
        description="Evaluate bilateral hypergeometric series and their closed forms, "
        "verify the identity registry, sweep parameter grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_numeric_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--rel-tol", type=float, default=1e-6, help="series stopping tolerance")
        p.add_argument(
            "--max-half-width", type=int, default=200_000, help="series truncation cap per side"
        )

    p_eval = sub.add_parser("eval", help="evaluate one series or closed form")
    p_eval.add_argument("kind", choices=("series", "closed"))
    p_eval.add_argument("target")
    p_eval.add_argument("--branch", choices=("plus", "minus"), default="plus")
    add_numeric_flags(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run the identity registry")
    add_numeric_flags(p_verify)
    p_verify.add_argument("--samples", type=int, default=50, help="points per identity")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument(
        "--identity",
        action="append",
        metavar="ID",
        help=f"restrict to an identity (repeatable); known: {', '.join(registry_ids())}",
    )
    p_verify.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="evaluate a target over a parameter grid")
    p_sweep.add_argument("target")
    p_sweep.add_argument("--var", required=True, help="parameter to sweep, or 'theta' for z=e^(i theta)")
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--branch", choices=("plus", "minus"), default="plus")
    p_sweep.add_argument("--format", choices=("jsonl", "csv"), default="csv")
    add_numeric_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args, extras = parser.parse_known_args(argv)
    except SystemExit as exc:
        # argparse already printed a diagnostic; normalize --help to 0
        return int(exc.code or 0)
    return args.func(args, extras)


if __name__ == "__main__":
    sys.exit(main())
