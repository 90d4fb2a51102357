"""Integer triangles and parallelograms: second diagonal, Heron area, cases.

A parallelogram with integer sides ``a, b`` and one integer diagonal ``d1``
falls into one of four rationality cases depending on whether the partner
diagonal and the area are rational:

    case2   partner irrational, area irrational
    case3   partner rational,   area irrational
    case5   partner irrational, area rational
    case6   partner rational,   area rational

Cases 1 and 4 (no rational diagonal) exist in the label space but cannot
arise when a diagonal is given.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterator, List, Optional, Tuple

from .exactnum import exact_isqrt, is_square, sqrt_rational


class ParallelogramCase(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"
    CASE5 = "case5"
    CASE6 = "case6"


class InvalidPolygon(ValueError):
    pass


def check_parallelogram(a: int, b: int, d1: int) -> None:
    if min(a, b, d1) <= 0:
        raise InvalidPolygon(f"sides and diagonal must be positive: {(a, b, d1)}")
    if not abs(a - b) < d1 < a + b:
        raise InvalidPolygon(
            f"diagonal {d1} must lie strictly between |a-b|={abs(a - b)} and a+b={a + b}"
        )


def check_triangle(x: int, y: int, z: int) -> None:
    if min(x, y, z) < 0 or x > y + z or y > x + z or z > x + y:
        raise InvalidPolygon(f"({x}, {y}, {z}) violates the triangle inequality")


def second_diagonal_squared(a: int, b: int, d1: int) -> Fraction:
    check_parallelogram(a, b, d1)
    return Fraction(2 * (a * a + b * b) - d1 * d1)


def heron_product(x: int, y: int, z: int) -> int:
    """(x+y+z)(-x+y+z)(x-y+z)(x+y-z), i.e. sixteen times the squared area."""
    return (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z)


def heron_area_squared(x: int, y: int, z: int) -> Fraction:
    check_triangle(x, y, z)
    return Fraction(heron_product(x, y, z), 16)


def parallelogram_area_squared(a: int, b: int, d1: int) -> Fraction:
    """Twice the triangle (a, b, d1), squared."""
    check_parallelogram(a, b, d1)
    return 4 * heron_area_squared(a, b, d1)


def _case(partner_rational: bool, area_rational: bool) -> ParallelogramCase:
    if partner_rational:
        return ParallelogramCase.CASE6 if area_rational else ParallelogramCase.CASE3
    return ParallelogramCase.CASE5 if area_rational else ParallelogramCase.CASE2


def classify_parallelogram(a: int, b: int, d1: int) -> ParallelogramCase:
    check_parallelogram(a, b, d1)
    partner = is_square(2 * (a * a + b * b) - d1 * d1)
    # parallelogram area^2 = heron_product / 4
    area = is_square(heron_product(a, b, d1))
    return _case(partner, area)


@dataclass(frozen=True)
class ParallelogramSpec:
    side_a: int
    side_b: int
    diag1: int
    diag2_squared: Fraction
    area_squared: Fraction

    @classmethod
    def build(cls, a: int, b: int, d1: int) -> "ParallelogramSpec":
        return cls(a, b, d1, second_diagonal_squared(a, b, d1),
                   parallelogram_area_squared(a, b, d1))

    @property
    def diag2(self) -> Optional[int]:
        return exact_isqrt(int(self.diag2_squared))

    @property
    def area(self) -> Optional[Fraction]:
        return sqrt_rational(self.area_squared)

    @property
    def case(self) -> ParallelogramCase:
        return classify_parallelogram(self.side_a, self.side_b, self.diag1)

    def csv_row(self) -> List[str]:
        d2 = self.diag2
        area = self.area
        return [str(self.side_a), str(self.side_b), str(self.diag1),
                "" if d2 is None else str(d2),
                "" if area is None else str(area),
                self.case.value]


# Published tallies for max_a = 100, printed beside ours by `pipedlab stats`.
# They do not follow from the stated loop bounds, so they are not a gate.
REFERENCE_STATS_MAX_A = 100
REFERENCE_STATS = {
    ParallelogramCase.CASE2: 737628,
    ParallelogramCase.CASE5: 1827,
    ParallelogramCase.CASE3: 6683,
    ParallelogramCase.CASE6: 206,
    "right": 63,
    "scalene": 143,
    "total": 746344,
}


@dataclass
class ParallelogramStats:
    max_a: int
    cases: Dict[ParallelogramCase, int]
    right: int
    scalene: int

    @property
    def total(self) -> int:
        return sum(self.cases.values())

    def as_dict(self) -> Dict[str, int]:
        out = {c.value: self.cases.get(c, 0) for c in (
            ParallelogramCase.CASE2, ParallelogramCase.CASE5,
            ParallelogramCase.CASE3, ParallelogramCase.CASE6)}
        out.update(right=self.right, scalene=self.scalene, total=self.total)
        return out


def _is_right(x: int, y: int, z: int) -> bool:
    p, q, r = sorted((x, y, z))
    return p * p + q * q == r * r


def stats_for_side(a: int) -> Tuple[Counter, int, int]:
    """Tally of every (a, b, c) with 0 < b < a and a-b < c < a+b."""
    tally: Counter = Counter()
    right = scalene = 0
    for b in range(1, a):
        s = 2 * (a * a + b * b)
        for c in range(a - b + 1, a + b):
            case = _case(is_square(s - c * c), is_square(heron_product(a, b, c)))
            tally[case] += 1
            if case is ParallelogramCase.CASE6:
                if _is_right(a, b, c):
                    right += 1
                else:
                    scalene += 1
    return tally, right, scalene


def enumerate_parallelogram_stats(max_a: int, workers: int = 1) -> ParallelogramStats:
    """Case tally over all integer (a, b, c) with 0 < a <= max_a.

    Work is split by the outer side ``a``; merging is a plain sum, so the
    result does not depend on ``workers``.
    """
    sides = range(1, max_a + 1)
    if workers > 1 and max_a > 1:
        from multiprocessing import Pool
        with Pool(workers) as pool:
            parts = pool.map(stats_for_side, sides, chunksize=4)
    else:
        parts = [stats_for_side(a) for a in sides]
    cases: Counter = Counter()
    right = scalene = 0
    for tally, r, s in parts:
        cases.update(tally)
        right += r
        scalene += s
    return ParallelogramStats(max_a, dict(cases), right, scalene)


Entry = Tuple[int, int, int, int]


def _rational_parallelograms_with_short_side(a: int) -> Iterator[Entry]:
    """All (a, b, d1, d2) with a <= b, d1 <= d2 and both diagonals integer.

    Writing d = b + x with |x| < a turns 2(a^2+b^2) = d1^2 + d2^2 into
    2b(x1+x2) = 2a^2 - x1^2 - x2^2 with x1 + x2 != 0, hence b <= a^2.
    """
    for b in range(a, a * a + 1):
        s = 2 * (a * a + b * b)
        for d1 in range(b - a + 1, a + b):
            d2_sq = s - d1 * d1
            if d2_sq < d1 * d1:
                break
            d2 = isqrt(d2_sq)
            if d2 * d2 == d2_sq:
                yield a, b, d1, d2


def smallest_parallelograms(case: int, side_bound: Optional[int] = None,
                            limit: Optional[int] = None) -> List[Entry]:
    """Integer parallelograms with both diagonals rational (case 3) or with
    rational area as well (case 6), as (a, b, d1, d2) with a <= b, d1 <= d2.

    Ordered by (a, b, d1).  ``side_bound`` caps both sides; ``limit`` keeps
    the first entries in that order, which is complete because each short
    side admits only finitely many long sides.
    """
    if case not in (3, 6):
        raise ValueError(f"case must be 3 or 6, got {case}")
    if side_bound is None and limit is None:
        raise ValueError("need side_bound or limit")
    out: List[Entry] = []
    a = 0
    while True:
        a += 1
        if side_bound is not None and a > side_bound:
            break
        for entry in _rational_parallelograms_with_short_side(a):
            if side_bound is not None and entry[1] > side_bound:
                break
            if case == 6 and not is_square(heron_product(*entry[:3])):
                continue
            out.append(entry)
            if limit is not None and len(out) >= limit:
                return out
    return out


def parallelograms_in_common(limit: int = 10) -> List[Entry]:
    """Case-6 entries among the first ``limit`` that also fall in the short-
    side range spanned by the first ``limit`` case-3 entries."""
    first3 = smallest_parallelograms(3, limit=limit)
    reach = max(entry[0] for entry in first3)
    return [p for p in smallest_parallelograms(6, limit=limit) if p[0] <= reach]
