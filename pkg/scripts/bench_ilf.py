#!/usr/bin/env python3
"""Growth experiment for the run-boundary inverse-LF index.

For texts of growing length -- uniform random and highly repetitive --
this reports run counts, the integers the index retains, and median
build/query times over warmed repetitions.  The point of the table:
retained integers track the run count r, not the text length n, so the
repetitive family stays flat while the random family grows.
"""

import argparse
import random
import statistics
import time

from csq.cli import _ilf_stored_integers
from csq.rlbwt_ilf import build_ilf_index, ilf_query
from csq.text_core import Text


def make_text(family: str, n: int, rng: random.Random) -> Text:
    if family == "random":
        return Text.from_symbols([rng.randrange(4) for _ in range(n)], 4)
    # Periodic base with a few seeded edits: runs stay near-constant in n.
    symbols = [0] * n
    for i in range(7, n, 8):
        symbols[i] = 1
    for _ in range(max(1, n // 1024)):
        symbols[rng.randrange(n)] = rng.randrange(4)
    return Text.from_symbols(symbols, 4)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16384, help="largest text length")
    parser.add_argument("--repeat", type=int, default=3, help="timed repetitions")
    parser.add_argument("--batch", type=int, default=2000, help="queries per repetition")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(
        f"{'family':>10} {'n':>8} {'r':>6} {'r_shift':>8} "
        f"{'stored':>8} {'build_ms':>9} {'query_us':>9}"
    )
    for family in ("random", "repetitive"):
        n = 1024
        while n <= args.max_n:
            rng = random.Random(f"{args.seed}:{family}:{n}")
            text = make_text(family, n, rng)
            build_ilf_index(text)  # warm-up
            build_times = []
            index = None
            for _ in range(max(1, args.repeat)):
                t0 = time.perf_counter()
                index = build_ilf_index(text)
                build_times.append((time.perf_counter() - t0) * 1e3)
            assert index is not None
            queries = [rng.randint(1, n) for _ in range(max(1, args.batch))]
            for i in queries:  # warm-up
                ilf_query(index, i)
            query_times = []
            for _ in range(max(1, args.repeat)):
                t0 = time.perf_counter()
                for i in queries:
                    ilf_query(index, i)
                query_times.append((time.perf_counter() - t0) * 1e6 / len(queries))
            print(
                f"{family:>10} {n:>8} {index.r_original:>6} {index.r_shifted:>8} "
                f"{_ilf_stored_integers(index):>8} "
                f"{statistics.median(build_times):>9.2f} "
                f"{statistics.median(query_times):>9.3f}"
            )
            n *= 4
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
