"""Published example pipeds as fixtures, and a checker that replays them.

``data/pipeds.csv`` has one row per sextuple.  Blank expectation cells mean
"not stated": the checker then only requires a valid tetrahedron, and rows
tagged ``smallest-tetrahedron`` additionally require a nonzero volume.  A row
with ``valid=0`` records a listed sextuple that does not close at all; the
checker requires it to be rejected.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from typing import List, Optional, Tuple

from .classify import CLASS_NAMES, classify_edges
from .geometry import EdgeSextuple, InvalidTetrahedron, as_sextuple, gram_from_edges, volume_squared
from .signature import CategoryKey, category_of, compute_signature, is_perfect

PIPED_COLUMNS = ["source", "a", "b", "c", "d", "e", "f", "class", "skew",
                 "face_diag", "body_diag", "face_area", "body_area",
                 "volume_flag", "volume", "perfect", "valid", "note"]
NONDEGENERATE_SOURCES = {"smallest-tetrahedron"}


class FixtureError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class FixtureRow:
    line: int
    source: str
    edges: EdgeSextuple
    piped_class: Optional[str] = None
    counts: Optional[CategoryKey] = None
    volume: Optional[int] = None
    perfect: Optional[bool] = None
    valid: bool = True
    note: str = ""


def _read_text(path: Optional[str], name: str) -> str:
    if path is None:
        return resources.files("pipedlab").joinpath("data").joinpath(name).read_text(encoding="utf-8")
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _int_or_none(text: str, line: int, column: str) -> Optional[int]:
    text = text.strip()
    if not text:
        return None
    try:
        return int(text)
    except ValueError:
        raise FixtureError(line, f"column {column!r} is not an integer: {text!r}") from None


def _parse_piped(line: int, rec: dict) -> FixtureRow:
    try:
        edges = as_sextuple(_int_or_none(rec[k], line, k) for k in "abcdef")
    except InvalidTetrahedron as exc:
        raise FixtureError(line, str(exc)) from None
    cls = rec["class"].strip() or None
    if cls is not None and cls not in CLASS_NAMES:
        raise FixtureError(line, f"unknown class {cls!r}")
    raw = [_int_or_none(rec[k], line, k) for k in CategoryKey._fields[:5]]
    raw.append(_int_or_none(rec["volume_flag"], line, "volume_flag"))
    if all(x is None for x in raw):
        counts = None
    elif any(x is None for x in raw):
        raise FixtureError(line, "group counts must be all present or all blank")
    else:
        counts = CategoryKey(*raw)
    perfect = rec["perfect"].strip()
    if perfect not in ("", "0", "1"):
        raise FixtureError(line, f"perfect must be 0, 1 or blank, got {perfect!r}")
    valid = rec["valid"].strip()
    if valid not in ("0", "1"):
        raise FixtureError(line, f"valid must be 0 or 1, got {valid!r}")
    return FixtureRow(
        line=line,
        source=rec["source"].strip(),
        edges=edges,
        piped_class=cls,
        counts=counts,
        volume=_int_or_none(rec["volume"], line, "volume"),
        perfect=None if perfect == "" else perfect == "1",
        valid=valid == "1",
        note=rec["note"].strip(),
    )


def load_fixtures(path: Optional[str] = None) -> List[FixtureRow]:
    """Parse the piped fixtures; ``path=None`` reads the bundled file."""
    reader = csv.DictReader(io.StringIO(_read_text(path, "pipeds.csv")))
    if reader.fieldnames != PIPED_COLUMNS:
        raise FixtureError(1, f"expected header {PIPED_COLUMNS}, got {reader.fieldnames}")
    rows = []
    for rec in reader:
        line = reader.line_num
        if None in rec or any(v is None for v in rec.values()):
            raise FixtureError(line, "wrong number of columns")
        rows.append(_parse_piped(line, rec))
    return rows


def load_parallelograms(path: Optional[str] = None) -> List[Tuple[str, Tuple[int, int, int, int]]]:
    reader = csv.DictReader(io.StringIO(_read_text(path, "parallelograms.csv")))
    out = []
    for rec in reader:
        line = reader.line_num
        entry = tuple(_int_or_none(rec[k], line, k) for k in ("a", "b", "d1", "d2"))
        if any(x is None for x in entry):
            raise FixtureError(line, "blank parallelogram entry")
        out.append((rec["source"].strip(), entry))
    return out


@dataclass
class RowResult:
    row: FixtureRow
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass
class CorpusReport:
    results: List[RowResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> List[RowResult]:
        return [r for r in self.results if not r.ok]

    def summary(self) -> str:
        lines = []
        for r in self.results:
            status = "ok  " if r.ok else "FAIL"
            detail = "" if r.ok else "  " + "; ".join(r.problems)
            lines.append(f"{status} line {r.row.line:3d} {r.row.source:<22} {r.row.edges}{detail}")
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} rows pass")
        return "\n".join(lines)


def verify_row(row: FixtureRow) -> RowResult:
    result = RowResult(row)
    try:
        sig = compute_signature(row.edges)
        vol2 = volume_squared(gram_from_edges(row.edges))
    except InvalidTetrahedron as exc:
        if row.valid:
            result.problems.append(f"invalid tetrahedron: {exc}")
        return result
    if not row.valid:
        result.problems.append("expected the edges not to close, but they do")
        return result
    if row.source in NONDEGENERATE_SOURCES and vol2 == 0:
        result.problems.append("volume is zero")
    if row.piped_class is not None:
        got = classify_edges(row.edges)
        if got != row.piped_class:
            result.problems.append(f"class {got}, expected {row.piped_class}")
    if row.counts is not None:
        got = category_of(sig)
        if got != row.counts:
            result.problems.append(f"counts {tuple(got)}, expected {tuple(row.counts)}")
    if row.volume is not None and vol2 != row.volume ** 2:
        result.problems.append(f"volume^2 {vol2}, expected {row.volume}^2")
    if row.perfect is not None and is_perfect(sig) != row.perfect:
        result.problems.append(f"perfect {is_perfect(sig)}, expected {row.perfect}")
    return result


def verify_corpus(path: Optional[str] = None) -> CorpusReport:
    return CorpusReport([verify_row(row) for row in load_fixtures(path)])
