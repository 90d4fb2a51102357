#!/usr/bin/env python3
"""Run a bounded survey and summarize it.

Writes JSONL records to --out (if given) and prints class counts, the most
common category keys and any perfect or rational-volume records found.
"""

import argparse
import time

from pipedlab.search import SearchConfig, run_survey
from pipedlab.signature import is_perfect


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("max_basis", type=int)
    parser.add_argument("--perfect", action="store_true")
    parser.add_argument("--rational-volume", action="store_true")
    parser.add_argument("--class", dest="class_name")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out")
    parser.add_argument("--checkpoint")
    parser.add_argument("--resume", action="store_true")
    parser.add_argument("--top", type=int, default=10, help="category keys to list")
    args = parser.parse_args()

    cfg = SearchConfig(args.max_basis, class_name=args.class_name, perfect=args.perfect,
                       rational_volume=args.rational_volume, workers=args.workers,
                       output=args.out, checkpoint=args.checkpoint)

    def progress(a: int) -> None:
        if a % 25 == 0:
            print(f"  partition {a}/{cfg.max_basis}", flush=True)

    start = time.perf_counter()
    result = run_survey(cfg, resume=args.resume, on_partition=progress)
    elapsed = time.perf_counter() - start

    print(f"{result.total} records in {elapsed:.1f} s")
    for name, n in result.class_counts.items():
        print(f"  {name:<12}{n:>9}")
    print("most common category keys (skew, face_diag, body_diag, face_area, body_area, volume):")
    for key, n in sorted(result.histogram.items(), key=lambda kv: (-kv[1], kv[0]))[: args.top]:
        print(f"  {tuple(key)}  {n}")
    notable = [r for r in result.records if is_perfect(r.signature) or r.signature.volume == 1]
    if notable:
        print("perfect or rational-volume records:")
        for r in notable:
            tag = "perfect" if is_perfect(r.signature) else "rational volume"
            print(f"  {tuple(r.edges)}  {r.piped_class}  {tag}")


if __name__ == "__main__":
    main()
