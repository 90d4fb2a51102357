#!/usr/bin/env python3
"""Tally integer parallelograms by rationality case and time the run.

Enumerates sides a in 1..MAX_A, b < a and one diagonal c with a-b < c < a+b.
"""

import argparse
import time

from pipedlab.polygon import (
    REFERENCE_STATS,
    REFERENCE_STATS_MAX_A,
    ParallelogramCase,
    enumerate_parallelogram_stats,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-a", type=int, default=REFERENCE_STATS_MAX_A)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    stats = enumerate_parallelogram_stats(args.max_a, workers=args.workers)
    elapsed = time.perf_counter() - start

    counts = stats.as_dict()
    total = counts["total"] or 1
    show_ref = args.max_a == REFERENCE_STATS_MAX_A
    print(f"{'row':<8}{'count':>10}{'percent':>10}" + (f"{'reference':>12}" if show_ref else ""))
    for key, value in counts.items():
        line = f"{key:<8}{value:>10}{100 * value / total:>9.4f}%"
        if show_ref:
            ref_key = key if key in ("right", "scalene", "total") else ParallelogramCase(key)
            line += f"{REFERENCE_STATS[ref_key]:>12}"
        print(line)
    if stats.scalene:
        print(f"right/scalene ratio {stats.right / stats.scalene:.3f}")
    print(f"elapsed {elapsed:.2f} s")


if __name__ == "__main__":
    main()
