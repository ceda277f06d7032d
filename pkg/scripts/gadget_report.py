#!/usr/bin/env python3
"""Verification-and-size report across every gadget family.

For each gadget kind this verifies seeded random instances (or the
exhaustive family with --exhaustive; keep --size small there) and
prints one row: instance and query totals, mismatches, the largest
text length and run count seen, the greedy phrase count z, and the
certificate phrase count against its closed-form bound.  Exits nonzero
if any kind reports a mismatch.
"""

import argparse

from csq.gadgets import KINDS, verify_many


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=5, help="permutation length n or set size m")
    parser.add_argument("--trials", type=int, default=25, help="seeded random instances per kind")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--exhaustive",
        action="store_true",
        help="enumerate every instance of the given size instead of sampling",
    )
    args = parser.parse_args()
    if args.size < 1:
        parser.error("--size must be at least 1")

    print(
        f"{'kind':>12} {'instances':>9} {'queries':>8} {'mismatch':>8} "
        f"{'|T|':>7} {'runs':>5} {'z':>5} {'cert':>5} {'bound':>6} {'ok':>5}"
    )
    failures = 0
    for kind in KINDS:
        report = verify_many(
            kind,
            args.size,
            exhaustive=args.exhaustive,
            trials=args.trials,
            seed=args.seed,
        )
        failures += not report.ok
        print(
            f"{kind:>12} {report.instances:>9} {report.query_count:>8} "
            f"{report.mismatch_count:>8} {report.text_length:>7} {report.rl_runs:>5} "
            f"{report.lz_phrases:>5} {report.cert_phrases:>5} {report.cert_bound:>6} "
            f"{str(report.ok):>5}"
        )
        if report.first_mismatch is not None:
            print(f"{'':>12} first mismatch: {report.first_mismatch!r}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
