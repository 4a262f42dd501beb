#!/usr/bin/env python3
"""Run the identity registry and print a per-identity summary table.

The `bihyp verify` subcommand emits one record per point for machines;
this script aggregates the same reports for humans: worst residual, pass
counts, and the parameter point behind the worst residual per identity.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict
from dataclasses import dataclass

from bihyp import SuiteConfig, registry_ids, run_suite


@dataclass(frozen=True)
class TableConfig:
    samples: int = 50
    seed: int = 42
    rel_tol: float = 1e-6
    max_half_width: int = 200_000
    identities: tuple[str, ...] | None = None


def summarize(config: TableConfig) -> int:
    suite = SuiteConfig(
        rel_tol=config.rel_tol,
        max_half_width=config.max_half_width,
        sample_count=config.samples,
        rng_seed=config.seed,
        identity_filter=config.identities,
    )
    t0 = time.perf_counter()
    reports = run_suite(suite)
    elapsed = time.perf_counter() - t0

    grouped = defaultdict(list)
    for r in reports:
        grouped[r.identity_id].append(r)

    width = max(len(i) for i in grouped)
    print(f"{'identity':<{width}}  {'pass':>9}  {'worst residual':>15}  {'tolerance':>10}")
    failures = 0
    for ident, rs in grouped.items():
        worst = max(rs, key=lambda r: r.residual if r.residual == r.residual else float("inf"))
        npass = sum(r.passed for r in rs)
        failures += len(rs) - npass
        print(f"{ident:<{width}}  {npass:>4}/{len(rs):<4}  {worst.residual:>15.3e}  {worst.tolerance:>10.0e}")
        if npass != len(rs):
            point = ", ".join(f"{k}={v:.6g}" for k, v in worst.parameter_point.items())
            print(f"{'':<{width}}  worst point: {point}")
            print(f"{'':<{width}}  notes: {worst.notes}")
    print(f"\n{len(reports)} reports, {failures} failures, {elapsed:.1f}s")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--rel-tol", type=float, default=1e-6)
    parser.add_argument("--max-half-width", type=int, default=200_000)
    parser.add_argument(
        "--identity",
        action="append",
        choices=registry_ids(),
        help="restrict to one identity (repeatable)",
    )
    args = parser.parse_args(argv)
    return summarize(
        TableConfig(
            samples=args.samples,
            seed=args.seed,
            rel_tol=args.rel_tol,
            max_half_width=args.max_half_width,
            identities=tuple(args.identity) if args.identity else None,
        )
    )


if __name__ == "__main__":
    sys.exit(main())
