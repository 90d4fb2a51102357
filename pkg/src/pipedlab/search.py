"""Bounded search for tetrahedrons whose six face diagonals are all integers.

Every face of such a tetrahedron is half of an integer parallelogram with
two integer diagonals.  The search therefore starts from a table of those
parallelograms keyed by their side pair, picks basis lengths ``A <= B <= C``
whose three side pairs all occur in the table, picks one diagonal pair per
face and finally one diagonal out of each pair.

Flipping the choice on one face swaps the tetrahedron for a different one;
flipping two faces gives a relabeling of the same parallelepiped.  Of the 8
choices, the even ones form one family and the odd ones another, so the
survey only evaluates one representative of each parity.

Work is split by the smallest basis length ``A``.  Every family member has
the same smallest basis length, so partitions never share a family and each
can deduplicate on its own.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .classify import CLASS_NAMES, classify
from .exactnum import is_square, sign
from .family import family_members
from .geometry import EdgeSextuple, doubled_gram
from .signature import (
    CategoryKey,
    ComponentSignature,
    signature_unchecked,
    body_diagonals_rational,
    category_of,
    doubled_gram_det,
    volume_flag_from_det,
)

THREADS_ENV = "PIPEDLAB_THREADS"

DiagonalPair = Tuple[int, int]
PairTable = Dict[Tuple[int, int], Tuple[DiagonalPair, ...]]


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n


@dataclass
class SearchConfig:
    max_basis: int
    class_name: Optional[str] = None
    perfect: bool = False
    rational_volume: bool = False
    workers: int = field(default_factory=default_workers)  # 0 = one per CPU
    checkpoint_interval: int = 1  # partitions between checkpoint writes
    output: Optional[str] = None
    checkpoint: Optional[str] = None
    flat_faces: bool = False

    def __post_init__(self):
        if self.max_basis < 0:
            raise ValueError(f"max_basis must be >= 0, got {self.max_basis}")
        if self.class_name is not None and self.class_name not in CLASS_NAMES:
            raise ValueError(f"unknown class {self.class_name!r}; expected one of {CLASS_NAMES}")
        if self.workers < 0:
            raise ValueError("workers must be >= 0")
        if self.checkpoint_interval < 1:
            raise ValueError("checkpoint_interval must be >= 1")

    def resolved_workers(self) -> int:
        return self.workers or os.cpu_count() or 1

    def fingerprint(self) -> Dict[str, object]:
        """Fields that determine the output; a checkpoint must match them."""
        return {
            "max_basis": self.max_basis,
            "class_name": self.class_name,
            "perfect": self.perfect,
            "rational_volume": self.rational_volume,
            "flat_faces": self.flat_faces,
        }


def parallelogram_table(max_side: int, flat_faces: bool = False) -> PairTable:
    """Side pair (x <= y) -> integer diagonal pairs (z <= z^)."""
    table: PairTable = {}
    for x in range(1, max_side + 1):
        for y in range(x, max_side + 1):
            s = 2 * (x * x + y * y)
            pairs: List[DiagonalPair] = []
            if flat_faces and x != y:
                pairs.append((y - x, x + y))
            z = y - x + 1
            while 2 * z * z <= s:
                rest = s - z * z
                if is_square(rest):
                    pairs.append((z, isqrt(rest)))
                z += 1
            if pairs:
                table[(x, y)] = tuple(sorted(pairs))
    return table


def partners(table: PairTable) -> Dict[int, Tuple[int, ...]]:
    out: Dict[int, List[int]] = {}
    for x, y in table:
        out.setdefault(x, []).append(y)
    return {x: tuple(sorted(ys)) for x, ys in out.items()}


def basis_triples(table: PairTable, nbrs, a: int) -> Iterator[Tuple[int, int, int]]:
    ys = nbrs.get(a, ())
    for i, b in enumerate(ys):
        for c in ys[i:]:
            if (b, c) in table:
                yield a, b, c


def _closes(s: EdgeSextuple) -> bool:
    return doubled_gram_det(doubled_gram(s)) >= 0


def combinations(a: int, b: int, c: int, ab: DiagonalPair, ac: DiagonalPair,
                 bc: DiagonalPair) -> List[EdgeSextuple]:
    """Distinct sextuples from one diagonal pair per face, in fixed order."""
    seen = []
    for x in ab:
        for y in ac:
            for z in bc:
                s = EdgeSextuple(a, x, b, y, c, z)
                if s not in seen:
                    seen.append(s)
    return seen


def assemble_tetrahedrons(cfg: SearchConfig) -> Iterator[EdgeSextuple]:
    """Every sextuple with sorted basis lengths <= cfg.max_basis, integer face
    diagonals on all three faces and a non-negative volume.  Flat ones
    (volume 0) are included."""
    table = parallelogram_table(cfg.max_basis, cfg.flat_faces)
    nbrs = partners(table)
    for a in range(1, cfg.max_basis + 1):
        for _, b, c in basis_triples(table, nbrs, a):
            for ab in table[(a, b)]:
                for ac in table[(a, c)]:
                    for bc in table[(b, c)]:
                        for s in combinations(a, b, c, ab, ac, bc):
                            if _closes(s):
                                yield s


def _exact_decimal(q: Fraction) -> str:
    """Decimal text of a rational whose denominator is a power of two."""
    if q.denominator == 1:
        return str(q.numerator)
    den = q.denominator
    shift = den.bit_length() - 1
    if den != 1 << shift:
        return str(q)
    scaled = q.numerator * 5 ** shift
    minus = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(shift + 1, "0")
    return f"{minus}{digits[:-shift]}.{digits[-shift:]}"


@dataclass(frozen=True)
class SearchRecord:
    edges: EdgeSextuple
    piped_class: str
    signature: ComponentSignature
    volume_squared: Fraction

    @property
    def category(self) -> CategoryKey:
        return category_of(self.signature)

    def to_dict(self) -> Dict[str, object]:
        return {
            "edges": list(self.edges),
            "class": self.piped_class,
            "sig": self.signature.to_string(),
            "vol_flag": self.signature.volume,
            "vol2": _exact_decimal(self.volume_squared),
            "category": list(self.category),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "SearchRecord":
        return cls(
            edges=EdgeSextuple(*(int(x) for x in data["edges"])),
            piped_class=str(data["class"]),
            signature=ComponentSignature.from_string(str(data["sig"])),
            volume_squared=Fraction(str(data["vol2"])),
        )


def analyze_record(s: EdgeSextuple) -> SearchRecord:
    """Record for an already validated sextuple (no canonicalization)."""
    h = doubled_gram(s)
    sig = signature_unchecked(s)
    return SearchRecord(
        edges=s,
        piped_class=classify(sign(x) for x in h[3:]),
        signature=sig,
        volume_squared=Fraction(doubled_gram_det(h), 8),
    )


def _passes_prefilters(s: EdgeSextuple, cfg: SearchConfig) -> bool:
    """Filters that are family invariants and cheap on any representative.

    Also rejects sextuples that do not close.  Every face diagonal is an
    integer by construction, so "perfect" reduces to the body diagonals.
    """
    if cfg.perfect and not all(body_diagonals_rational(s)):
        return False
    h = doubled_gram(s)
    det_h = doubled_gram_det(h)
    if det_h < 0:
        return False
    if cfg.rational_volume and volume_flag_from_det(det_h) != 1:
        return False
    if cfg.class_name is not None and classify(sign(x) for x in h[3:]) != cfg.class_name:
        return False
    return True


def survey_partition(a: int, table: PairTable, nbrs, cfg: SearchConfig) -> List[SearchRecord]:
    """Records whose smallest basis length is ``a``, sorted by edges."""
    found: Dict[EdgeSextuple, SearchRecord] = {}
    for _, b, c in basis_triples(table, nbrs, a):
        for ab in table[(a, b)]:
            for ac in table[(a, c)]:
                for bc in table[(b, c)]:
                    # one representative per parity class of diagonal choices
                    for x in dict.fromkeys(ab):
                        s = EdgeSextuple(a, x, b, ac[0], c, bc[0])
                        if not _passes_prefilters(s, cfg):
                            continue
                        members, _ = family_members(s)
                        key = min(members)
                        if key not in found:
                            found[key] = analyze_record(key)
    return [found[k] for k in sorted(found)]


_WORKER_STATE = {}


def _init_worker(table: PairTable, cfg: SearchConfig) -> None:
    _WORKER_STATE["table"] = table
    _WORKER_STATE["nbrs"] = partners(table)
    _WORKER_STATE["cfg"] = cfg


def _worker_partition(a: int) -> List[SearchRecord]:
    st = _WORKER_STATE
    return survey_partition(a, st["table"], st["nbrs"], st["cfg"])


@dataclass
class SurveyResult:
    records: List[SearchRecord]
    class_counts: Dict[str, int]
    histogram: Dict[CategoryKey, int]

    @property
    def total(self) -> int:
        return len(self.records)


def _tally(records: Sequence[SearchRecord]) -> Tuple[Counter, Counter]:
    classes: Counter = Counter({name: 0 for name in CLASS_NAMES})
    hist: Counter = Counter()
    for r in records:
        classes[r.piped_class] += 1
        hist[r.category] += 1
    return classes, hist


def _atomic_write(path: str, text: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def records_jsonl(records: Sequence[SearchRecord]) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def write_checkpoint(path: str, cfg: SearchConfig, next_a: int,
                     records: Sequence[SearchRecord]) -> None:
    classes, hist = _tally(records)
    token = {
        "config": cfg.fingerprint(),
        "next_a": next_a,
        "classes": dict(classes),
        "histogram": [list(k) + [n] for k, n in sorted(hist.items())],
    }
    _atomic_write(path, json.dumps(token) + "\n" + records_jsonl(records))


def read_checkpoint(path: str, cfg: SearchConfig) -> Tuple[int, List[SearchRecord]]:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"checkpoint {path} is empty")
    token = json.loads(lines[0])
    if token.get("config") != cfg.fingerprint():
        raise ValueError(
            f"checkpoint {path} was written for {token.get('config')}, not {cfg.fingerprint()}"
        )
    records = [SearchRecord.from_dict(json.loads(line)) for line in lines[1:] if line]
    classes, _ = _tally(records)
    if dict(classes) != token["classes"]:
        raise ValueError(f"checkpoint {path} tallies do not match its records")
    return int(token["next_a"]), records


def run_survey(cfg: SearchConfig, resume: bool = False,
               on_partition: Optional[Callable[[int], None]] = None) -> SurveyResult:
    """Search all partitions, checkpointing as configured.

    ``on_partition`` is called with the partition index after each one is
    merged (and checkpointed, when due).
    """
    start, records = 1, []
    if resume:
        if not cfg.checkpoint:
            raise ValueError("resume requested without a checkpoint path")
        if os.path.exists(cfg.checkpoint):
            start, records = read_checkpoint(cfg.checkpoint, cfg)

    table = parallelogram_table(cfg.max_basis, cfg.flat_faces)
    todo = list(range(start, cfg.max_basis + 1))
    workers = cfg.resolved_workers()

    def merge(results: Iterator[List[SearchRecord]]) -> None:
        done = 0
        for a, part in zip(todo, results):
            records.extend(part)
            done += 1
            if cfg.checkpoint and (done % cfg.checkpoint_interval == 0 or a == todo[-1]):
                write_checkpoint(cfg.checkpoint, cfg, a + 1, records)
            if on_partition is not None:
                on_partition(a)

    if workers > 1 and len(todo) > 1:
        from multiprocessing import Pool
        with Pool(workers, initializer=_init_worker, initargs=(table, cfg)) as pool:
            merge(pool.imap(_worker_partition, todo, chunksize=1))
    else:
        nbrs = partners(table)
        merge(survey_partition(a, table, nbrs, cfg) for a in todo)

    classes, hist = _tally(records)
    if cfg.output:
        _atomic_write(cfg.output, records_jsonl(records))
    return SurveyResult(records, dict(classes), dict(hist))


def histogram_csv(hist: Dict[CategoryKey, int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(CategoryKey._fields) + ["count"])
    for key in sorted(hist):
        writer.writerow(list(key) + [hist[key]])
    return buf.getvalue()


def config_from_json(text: str, **overrides) -> SearchConfig:
    data = json.loads(text)
    known = set(SearchConfig.__dataclass_fields__)
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    return SearchConfig(**data)

