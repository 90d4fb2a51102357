from fractions import Fraction
from math import isqrt

import hypothesis
import hypothesis.strategies as st
import pytest

from pipedlab.corpus import load_parallelograms
from pipedlab.polygon import (
    InvalidPolygon,
    ParallelogramCase,
    ParallelogramSpec,
    classify_parallelogram,
    enumerate_parallelogram_stats,
    heron_area_squared,
    parallelogram_area_squared,
    parallelograms_in_common,
    second_diagonal_squared,
    smallest_parallelograms,
)

C2, C3, C5, C6 = (ParallelogramCase.CASE2, ParallelogramCase.CASE3,
                  ParallelogramCase.CASE5, ParallelogramCase.CASE6)


@st.composite
def parallelograms(draw, max_side=200):
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    d1 = draw(st.integers(abs(a - b) + 1, a + b - 1))
    return a, b, d1


@pytest.mark.parametrize("a, b, d1, expected", [
    (3, 4, 5, 25), (5, 5, 6, 64), (10, 10, 12, 256),
])
def test_second_diagonal(a, b, d1, expected):
    assert second_diagonal_squared(a, b, d1) == expected


@pytest.mark.parametrize("sides, expected", [
    ((3, 4, 5), 36), ((5, 5, 6), 144), ((9, 10, 17), 1296), ((1, 2, 3), 0),
])
def test_heron_area(sides, expected):
    assert heron_area_squared(*sides) == expected


def test_heron_rejects_broken_triangle():
    with pytest.raises(InvalidPolygon):
        heron_area_squared(1, 2, 4)


@pytest.mark.parametrize("a, b, d1, case", [
    (3, 4, 5, C6), (4, 7, 7, C3), (5, 5, 7, C2), (5, 5, 8, C6), (13, 14, 15, C5),
])
def test_classify_parallelogram(a, b, d1, case):
    assert classify_parallelogram(a, b, d1) is case


@pytest.mark.parametrize("args", [(3, 4, 7), (3, 4, 1), (0, 4, 4), (3, 4, 0)])
def test_degenerate_parallelogram_rejected(args):
    with pytest.raises(InvalidPolygon):
        classify_parallelogram(*args)


@hypothesis.given(parallelograms())
def test_parallelogram_law(p):
    a, b, d1 = p
    d2_sq = second_diagonal_squared(a, b, d1)
    assert d2_sq + d1 * d1 == 2 * (a * a + b * b)
    assert d2_sq > 0


@hypothesis.given(parallelograms())
def test_area_is_twice_triangle_either_diagonal(p):
    a, b, d1 = p
    area = parallelogram_area_squared(a, b, d1)
    assert area == 4 * heron_area_squared(a, b, d1)
    d2_sq = int(second_diagonal_squared(a, b, d1))
    d2 = isqrt(d2_sq)
    if d2 * d2 == d2_sq:
        assert parallelogram_area_squared(a, b, d2) == area
        assert classify_parallelogram(a, b, d2) is classify_parallelogram(a, b, d1)


@hypothesis.given(parallelograms())
def test_case_flags_match_spec_fields(p):
    spec = ParallelogramSpec.build(*p)
    case = spec.case
    assert (case in (C3, C6)) == (spec.diag2 is not None)
    assert (case in (C5, C6)) == (spec.area is not None)


def _gram_route_stats(max_a):
    """Independent tally: area and partner diagonal from the dot product."""
    tally = {2: 0, 3: 0, 5: 0, 6: 0}
    right = scalene = 0

    def rational(q):
        q = Fraction(q)
        n, d = q.numerator, q.denominator
        return q >= 0 and isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    for a in range(1, max_a + 1):
        for b in range(1, a):
            for c in range(a - b + 1, a + b):
                dot = Fraction(a * a + b * b - c * c, 2)
                partner = rational(a * a + b * b + 2 * dot)
                area = rational(a * a * b * b - dot * dot)
                case = {(0, 0): 2, (1, 0): 3, (0, 1): 5, (1, 1): 6}[(partner, area)]
                tally[case] += 1
                if case == 6:
                    x, y, z = sorted((a, b, c))
                    if x * x + y * y == z * z:
                        right += 1
                    else:
                        scalene += 1
    return tally, right, scalene


def test_stats_against_gram_oracle():
    tally, right, scalene = _gram_route_stats(40)
    stats = enumerate_parallelogram_stats(40)
    assert {int(k.value[-1]): v for k, v in stats.cases.items()} == {k: v for k, v in tally.items() if v}
    assert (stats.right, stats.scalene) == (right, scalene)


def test_stats_frozen_at_100():
    # frozen from the Gram-route oracle above, run at max_a = 100
    stats = enumerate_parallelogram_stats(100).as_dict()
    assert stats == {"case2": 322577, "case5": 852, "case3": 4830, "case6": 91,
                     "right": 63, "scalene": 28, "total": 328350}


def test_stats_small_bounds():
    assert enumerate_parallelogram_stats(2).total == 1
    assert enumerate_parallelogram_stats(0).total == 0
    five = enumerate_parallelogram_stats(5)
    assert five.cases[C6] >= 1 and five.right >= 1


def test_stats_independent_of_workers():
    assert enumerate_parallelogram_stats(25, workers=2) == enumerate_parallelogram_stats(25, workers=1)


def _table(name):
    return [entry for source, entry in load_parallelograms() if source == name]


def test_first_ten_tables():
    assert smallest_parallelograms(3, limit=10) == _table("case3-first10")
    assert smallest_parallelograms(6, limit=10) == _table("case6-first10")


def test_in_common_table():
    assert sorted(parallelograms_in_common()) == sorted(_table("in-common"))


def _brute_force(case, bound):
    out = []
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            for d1 in range(b - a + 1, a + b):
                d2_sq = 2 * (a * a + b * b) - d1 * d1
                d2 = isqrt(d2_sq)
                if d2 * d2 != d2_sq or d1 > d2:
                    continue
                area2 = Fraction((a + b + d1) * (-a + b + d1) * (a - b + d1) * (a + b - d1), 4)
                if case == 6 and isqrt(area2.numerator) ** 2 != area2.numerator:
                    continue
                out.append((a, b, d1, d2))
    return out


@pytest.mark.parametrize("case", [3, 6])
def test_bounded_lists_match_brute_force(case):
    assert sorted(smallest_parallelograms(case, side_bound=25)) == sorted(_brute_force(case, 25))


def test_membership_examples():
    case3 = set(smallest_parallelograms(3, side_bound=20))
    assert {(3, 4, 5, 5), (5, 5, 6, 8), (5, 12, 13, 13), (6, 7, 7, 11), (4, 7, 7, 9)} <= case3
    case6 = set(smallest_parallelograms(6, side_bound=26))
    assert {(7, 24, 25, 25), (10, 24, 26, 26), (8, 15, 17, 17)} <= case6


def test_case6_is_a_subset_of_case3():
    assert set(smallest_parallelograms(6, side_bound=40)) <= set(smallest_parallelograms(3, side_bound=40))


def test_case6_rows_give_heron_triangles():
    for a, b, d1, _ in smallest_parallelograms(6, side_bound=40):
        area2 = heron_area_squared(a, b, d1)
        assert isqrt(area2.numerator) ** 2 == area2.numerator
        assert area2.denominator in (1, 4, 16)


def test_smallest_requires_case_and_limit():
    with pytest.raises(ValueError):
        smallest_parallelograms(5, side_bound=10)
    with pytest.raises(ValueError):
        smallest_parallelograms(3)


def test_csv_row():
    assert ParallelogramSpec.build(3, 4, 5).csv_row() == ["3", "4", "5", "5", "12", "case6"]
    assert ParallelogramSpec.build(5, 5, 7).csv_row() == ["5", "5", "7", "", "", "case2"]
