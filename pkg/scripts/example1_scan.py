#!/usr/bin/env python3
"""Scan the conformal-potential curve over t and report scalar curvatures.

The curve parametrizes a one-parameter circle of structures on a flat
carrier; at each sample the scan checks the defining constraint, computes
tau and tau_tilde through two independent routes, and runs the full
conformal identity battery for each beta. Degenerate samples (where the
shared denominator vanishes) are reported and skipped.

Example:
    python scripts/example1_scan.py --n 2 --samples 19 --beta-grid=-0.25,0,1
"""

import argparse
import math
import sys

from accrgeo.errors import DegenerateParameter
from accrgeo.scenarios import DEFAULT_BETA_GRID, example1_curve, run_example1_report


def parse_grid(text):
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2, help="half of the carrier codimension")
    parser.add_argument("--samples", type=int, default=37, help="t samples over [0, 2*pi]")
    parser.add_argument("--beta-grid", type=parse_grid, default=DEFAULT_BETA_GRID)
    args = parser.parse_args(argv)

    if args.samples < 2:
        parser.error("need at least 2 samples")

    target = 4.0 * args.n * (args.n + 1)
    print(f"n = {args.n}, forced tau + tau_tilde = {target:g}")
    header = f"{'t':>10} {'tau':>12} {'tau_tilde':>12} {'sum':>10} {'checks':>7} status"
    print(header)
    print("-" * len(header))

    failed = 0
    for i in range(args.samples):
        t = 2.0 * math.pi * i / (args.samples - 1)
        try:
            point = example1_curve(t, args.n, args.beta_grid[0])
        except DegenerateParameter as exc:
            print(f"{t:>10.6f} {'-':>12} {'-':>12} {'-':>10} {'-':>7} degenerate ({exc})")
            continue
        n_checks = 0
        ok = True
        for beta in args.beta_grid:
            report = run_example1_report(t, args.n, beta)
            n_checks += len(report.checks)
            ok = ok and report.passed
        if not ok:
            failed += 1
        print(
            f"{t:>10.6f} {point.tau:>12.6f} {point.tau_assoc:>12.6f} "
            f"{point.tau + point.tau_assoc:>10.4f} {n_checks:>7} "
            f"{'pass' if ok else 'FAIL'}"
        )

    print(f"\n{failed} failing samples")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
