#!/usr/bin/env python3
"""Rebuild the example tables bundled with pipedlab and check them.

Prints the 27-row vertex class table, the case-3 and case-6 parallelogram
lists, their overlap, and the fixture replay summary.  Exits non-zero if
anything disagrees with the bundled data.
"""

import sys

from pipedlab.classify import class_of_group, classify, enumerate_vertex_classes
from pipedlab.corpus import load_parallelograms, verify_corpus
from pipedlab.polygon import parallelograms_in_common, smallest_parallelograms


def main() -> int:
    ok = True

    print("sign triple    class        closed form")
    for triple, group in enumerate_vertex_classes().items():
        by_group, closed = class_of_group(group), classify(triple)
        ok &= by_group == closed
        print(f"{str(triple):<14} {by_group:<12} {closed}")

    tables = {}
    for source, entry in load_parallelograms():
        tables.setdefault(source, []).append(entry)
    built = {
        "case3-first10": smallest_parallelograms(3, limit=10),
        "case6-first10": smallest_parallelograms(6, limit=10),
        "in-common": sorted(parallelograms_in_common()),
    }
    for name, rows in built.items():
        match = rows == sorted(tables[name]) if name == "in-common" else rows == tables[name]
        ok &= match
        print(f"\n{name}  ({'matches' if match else 'DIFFERS from'} bundled data)")
        for a, b, d1, d2 in rows:
            print(f"  {a:4d} {b:4d} {d1:4d} {d2:4d}")

    report = verify_corpus()
    ok &= report.ok
    print()
    print(report.summary().splitlines()[-1])
    for failure in report.failures:
        print(f"  line {failure.row.line}: {'; '.join(failure.problems)}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
