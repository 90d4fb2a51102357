"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad edges, out-of-domain parameters,
bad config), 2 usage error (argparse), 3 fixture verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional, Sequence

from . import classify as cls_mod
from .corpus import FixtureError, verify_corpus
from .family import tetra_family
from .geometry import InvalidTetrahedron, as_sextuple, check_faces, embed_coordinates, gram_from_edges
from .param import (
    HeronParams,
    OutOfDomain,
    WyssParams,
    heron_area_law,
    heron_sweep,
    heron_triangle,
    wyss_parallelogram,
    wyss_sweep,
)
from .polygon import (
    REFERENCE_STATS,
    REFERENCE_STATS_MAX_A,
    InvalidPolygon,
    ParallelogramCase,
    ParallelogramSpec,
    enumerate_parallelogram_stats,
    parallelograms_in_common,
    smallest_parallelograms,
)
from .search import (
    SearchConfig,
    analyze_record,
    config_from_json,
    default_workers,
    histogram_csv,
    run_survey,
)
from .signature import compute_signature, is_perfect

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


def _edges(values: Sequence[int]):
    s = as_sextuple(values)
    check_faces(s)
    return s


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _csv_out(rows: List[List[object]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerows(rows)


def cmd_analyze(args) -> int:
    s = _edges(args.edges)
    compute_signature(s)  # raises on a Gram determinant below zero
    record = analyze_record(s)
    perfect = is_perfect(record.signature)
    data = record.to_dict()
    data["perfect"] = perfect
    if args.json:
        _emit_json(data)
        return EXIT_OK
    if args.csv:
        _csv_out([list(data), [json.dumps(v) if isinstance(v, list) else v for v in data.values()]])
        return EXIT_OK
    key = record.category
    print(f"edges       {s}")
    print(f"class       {record.piped_class} ({cls_mod.LONG_NAMES[record.piped_class]})")
    print(f"signature   {record.signature}")
    for name in key._fields[:-1]:
        print(f"{name:<11} {getattr(key, name)}")
    print(f"volume      flag {record.signature.volume}, volume^2 {data['vol2']}")
    print(f"perfect     {'true' if perfect else 'false'}")
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.vertex_table:
        rows = []
        for triple, group in cls_mod.enumerate_vertex_classes().items():
            name = cls_mod.class_of_group(group)
            rows.append((triple, sorted(group), name, cls_mod.classify(triple)))
        if args.json:
            _emit_json([{"signs": list(t), "group": [list(x) for x in g], "class": n,
                         "closed_form": c} for t, g, n, c in rows])
        else:
            for t, g, n, c in rows:
                print(f"{str(t):<13} {n:<12} {' '.join(str(x) for x in g)}")
        return EXIT_OK
    if args.edges is None:
        raise DomainError("classify needs six edges or --vertex-table")
    if len(args.edges) != 6:
        raise UsageError("classify needs exactly six edges")
    s = _edges(args.edges)
    sv = cls_mod.sign_vector(gram_from_edges(s))
    name = cls_mod.classify(sv)
    if args.json:
        _emit_json({"edges": list(s), "signs": list(sv), "class": name})
    else:
        print(f"{name}  signs {tuple(sv)}")
    return EXIT_OK


def cmd_family(args) -> int:
    fam = tetra_family(_edges(args.edges))
    members = fam.sorted_members()
    if args.json:
        _emit_json({"origin": list(fam.origin), "canonical": list(fam.canonical),
                    "irrational_rows": fam.irrational_rows,
                    "members": [list(m) for m in members]})
    elif args.csv:
        _csv_out([list("abcdef")] + [list(m) for m in members])
    else:
        for m in members:
            print(m)
        print(f"# {len(members)} members, {fam.irrational_rows} rows dropped, canonical {fam.canonical}")
    return EXIT_OK


def cmd_embed(args) -> int:
    s = _edges(args.edges)
    compute_signature(s)
    emb = embed_coordinates(s)
    verts = emb.piped_vertices()
    if args.json:
        _emit_json({"edges": list(s), "vertices": {str(k): list(v) for k, v in verts.items()}})
        return EXIT_OK
    for label, xyz in verts.items():
        print(f"v{label}  " + "  ".join(f"{x:.12g}" for x in xyz))
    return EXIT_OK


def cmd_param_heron(args) -> int:
    if args.params:
        if len(args.params) != 4:
            raise UsageError("param-heron takes exactly four parameters M N P Q")
        hp = HeronParams(*args.params)
        items = [(hp, heron_triangle(hp))]
    else:
        items = list(heron_sweep(args.bound))
    if args.limit is not None:
        items = items[: args.limit]
    rows = []
    for hp, tri in items:
        rows.append([hp.m, hp.n, hp.p, hp.q, tri.a, tri.b, tri.c, heron_area_law(hp)])
    header = ["m", "n", "p", "q", "a", "b", "c", "area"]
    if args.json:
        for r in rows:
            _emit_json({k: str(v) if k == "area" else v for k, v in zip(header, r)})
    else:
        _csv_out([header] + rows)
    return EXIT_OK


def cmd_param_wyss(args) -> int:
    if args.params:
        if len(args.params) != 5:
            raise UsageError("param-wyss takes exactly five parameters K M N P Q")
        wp = WyssParams(*args.params)
        items = [(wp, wyss_parallelogram(wp))]
    else:
        items = list(wyss_sweep(args.bound, k=args.k))
    if args.limit is not None:
        items = items[: args.limit]
    header = ["k", "m", "n", "p", "q", "a", "b", "d1", "d2", "area", "case"]
    rows = []
    for wp, spec in items:
        area = spec.area
        rows.append([wp.k, wp.m, wp.n, wp.p, wp.q, spec.side_a, spec.side_b, spec.diag1,
                     spec.diag2, "" if area is None else str(area), spec.case.value])
    if args.json:
        for r in rows:
            _emit_json(dict(zip(header, r)))
    else:
        _csv_out([header] + rows)
    return EXIT_OK


def cmd_parallelograms(args) -> int:
    if args.check:
        specs = [ParallelogramSpec.build(*args.check)]
    else:
        if args.in_common:
            entries = parallelograms_in_common(args.limit or 10)
        else:
            if args.bound is None and args.limit is None:
                raise DomainError("need --bound or --limit")
            entries = smallest_parallelograms(args.case, side_bound=args.bound, limit=args.limit)
        specs = [ParallelogramSpec.build(a, b, d1) for a, b, d1, _ in entries]
    header = ["a", "b", "d1", "d2", "area", "case"]
    rows = [spec.csv_row() for spec in specs]
    if args.json:
        for r in rows:
            _emit_json(dict(zip(header, r)))
    else:
        _csv_out([header] + rows)
    return EXIT_OK


def cmd_stats(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    stats = enumerate_parallelogram_stats(args.max_a, workers=workers or 1)
    counts = stats.as_dict()
    show_ref = args.max_a == REFERENCE_STATS_MAX_A
    ref = {k.value if isinstance(k, ParallelogramCase) else k: v for k, v in REFERENCE_STATS.items()}
    if args.json:
        out = {"max_a": args.max_a, "counts": counts}
        if show_ref:
            out["reference"] = ref
        _emit_json(out)
        return EXIT_OK
    if args.csv:
        header = ["row", "count"] + (["reference"] if show_ref else [])
        _csv_out([header] + [[k, v] + ([ref[k]] if show_ref else []) for k, v in counts.items()])
        return EXIT_OK
    print(f"{'row':<10}{'count':>10}" + (f"{'reference':>12}" if show_ref else ""))
    for k, v in counts.items():
        print(f"{k:<10}{v:>10}" + (f"{ref[k]:>12}" if show_ref else ""))
    return EXIT_OK


def cmd_search(args) -> int:
    overrides = dict(
        max_basis=args.max_basis,
        class_name=args.class_name,
        perfect=args.perfect or None,
        rational_volume=args.rational_volume or None,
        workers=args.workers,
        output=args.out,
        checkpoint=args.checkpoint,
        checkpoint_interval=args.checkpoint_interval,
        flat_faces=args.flat_faces or None,
    )
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            cfg = config_from_json(fh.read(), **overrides)
    else:
        if args.max_basis is None:
            raise DomainError("search needs --max-basis or --config")
        cfg = SearchConfig(**{k: v for k, v in overrides.items() if v is not None})
    result = run_survey(cfg, resume=args.resume)
    if args.histogram:
        with open(args.histogram, "w", encoding="utf-8") as fh:
            fh.write(histogram_csv(result.histogram))
    if args.json:
        _emit_json({
            "records": result.total,
            "classes": result.class_counts,
            "histogram": [list(k) + [n] for k, n in sorted(result.histogram.items())],
        })
    elif args.csv:
        sys.stdout.write(histogram_csv(result.histogram))
    else:
        print(f"records {result.total}")
        for name, n in result.class_counts.items():
            print(f"{name:<12}{n:>10}")
        if cfg.output is None:
            for r in result.records:
                print(r.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify_corpus(args.fixtures)
    except FixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.json:
        _emit_json({"ok": report.ok, "rows": len(report.results),
                    "failures": [{"line": r.row.line, "edges": list(r.row.edges),
                                  "problems": r.problems} for r in report.failures]})
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _fmt_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output")
    g.add_argument("--csv", action="store_true", help="CSV output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pipedlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="class, signature and volume of a sextuple")
    p.add_argument("edges", type=int, nargs=6, metavar="EDGE")
    _fmt_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="orthogonality class of a sextuple")
    p.add_argument("edges", type=int, nargs="*", metavar="EDGE")
    p.add_argument("--vertex-table", action="store_true",
                   help="list all 27 sign triples with their vertex groups")
    _fmt_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="relabelings spanning the same piped")
    p.add_argument("edges", type=int, nargs=6, metavar="EDGE")
    _fmt_flags(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("embed", help="float coordinates of the piped vertices")
    p.add_argument("edges", type=int, nargs=6, metavar="EDGE")
    _fmt_flags(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("param-heron", help="Heron triangles from (m, n, p, q)")
    p.add_argument("params", type=int, nargs="*", metavar="M N P Q")
    p.add_argument("--bound", type=int, default=4, help="sweep parameters in 1..BOUND")
    p.add_argument("--limit", type=int)
    _fmt_flags(p)
    p.set_defaults(func=cmd_param_heron)

    p = sub.add_parser("param-wyss", help="rational-diagonal parallelograms from (k, m, n, p, q)")
    p.add_argument("params", type=int, nargs="*", metavar="K M N P Q")
    p.add_argument("--bound", type=int, default=4, help="sweep m, n, p, q in 1..BOUND")
    p.add_argument("--k", type=int, default=1, help="scale factor for sweeps")
    p.add_argument("--limit", type=int)
    _fmt_flags(p)
    p.set_defaults(func=cmd_param_wyss)

    p = sub.add_parser("parallelograms", help="smallest integer parallelograms by case")
    p.add_argument("--case", type=int, choices=(3, 6), default=3)
    p.add_argument("--bound", type=int, help="cap on both sides")
    p.add_argument("--limit", type=int, help="first N in (a, b, d1) order")
    p.add_argument("--in-common", action="store_true")
    p.add_argument("--check", type=int, nargs=3, metavar=("A", "B", "D1"),
                   help="classify one parallelogram")
    _fmt_flags(p)
    p.set_defaults(func=cmd_parallelograms)

    p = sub.add_parser("stats", help="case tally of integer parallelograms")
    p.add_argument("--max-a", type=int, default=REFERENCE_STATS_MAX_A)
    p.add_argument("--workers", type=int)
    _fmt_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("search", help="survey tetrahedrons with integer face diagonals")
    p.add_argument("--max-basis", type=int)
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--rational-volume", action="store_true")
    p.add_argument("--class", dest="class_name", choices=cls_mod.CLASS_NAMES)
    p.add_argument("--out", help="JSONL records file")
    p.add_argument("--histogram", help="category histogram CSV file")
    p.add_argument("--checkpoint")
    p.add_argument("--checkpoint-interval", type=int)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--workers", type=int, help="worker processes (0 = auto); default from PIPEDLAB_THREADS")
    p.add_argument("--flat-faces", action="store_true", help="also allow flat face parallelograms")
    p.add_argument("--config", help="JSON file of search settings; flags override it")
    _fmt_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="replay the bundled example fixtures")
    p.add_argument("--fixtures", help="alternate fixture CSV")
    _fmt_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, InvalidTetrahedron, InvalidPolygon, OutOfDomain, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
