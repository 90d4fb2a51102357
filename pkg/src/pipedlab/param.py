"""Parametric generators for Heron triangles and rational-diagonal parallelograms.

Both generators evaluate integer polynomials in the parameters.  Negative
outputs are folded with ``abs`` and zero or degenerate outputs are rejected
with :class:`OutOfDomain`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from .polygon import (
    InvalidPolygon,
    ParallelogramSpec,
    check_triangle,
    heron_area_squared,
)


class OutOfDomain(ValueError):
    pass


@dataclass(frozen=True)
class HeronParams:
    m: int
    n: int
    p: int
    q: int

    def __post_init__(self):
        if min(self.m, self.n, self.p, self.q) <= 0:
            raise OutOfDomain(f"parameters must be positive: {self}")


@dataclass(frozen=True)
class HeronTriangle:
    a: int
    b: int
    c: int
    area_squared: Fraction

    @property
    def sides(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.c


def heron_sides_raw(hp: HeronParams) -> Tuple[int, int, int]:
    m, n, p, q = hp.m, hp.n, hp.p, hp.q
    a = m * n * (p * p + q * q)
    b = p * q * (m * m + n * n)
    c = p * q * (n * n - m * m) + m * n * (q * q - p * p)
    return a, b, c


def heron_area_law(hp: HeronParams) -> int:
    """Closed-form area |mnpq(mq+np)(nq-mp)|, checked against Heron's formula."""
    m, n, p, q = hp.m, hp.n, hp.p, hp.q
    return abs(m * n * p * q * (m * q + n * p) * (n * q - m * p))


def heron_area_law_quadrupled(hp: HeronParams) -> int:
    """The same expression with an extra factor 4.

    Kept only to document that this variant disagrees with Heron's formula,
    e.g. (1,2,1,3) gives 600 for the 15-20-25 triangle whose area is 150.
    """
    return 4 * heron_area_law(hp)


def heron_triangle(hp: HeronParams) -> HeronTriangle:
    a, b, c = heron_sides_raw(hp)
    c = abs(c)
    if c == 0:
        raise OutOfDomain(f"{hp} gives a zero side")
    try:
        check_triangle(a, b, c)
    except InvalidPolygon as exc:
        raise OutOfDomain(str(exc)) from None
    area_sq = heron_area_squared(a, b, c)
    if area_sq == 0:
        raise OutOfDomain(f"{hp} gives a degenerate triangle {(a, b, c)}")
    return HeronTriangle(a, b, c, area_sq)


@dataclass(frozen=True)
class WyssParams:
    k: int
    m: int
    n: int
    p: int
    q: int

    def __post_init__(self):
        if min(self.k, self.m, self.n, self.p, self.q) <= 0:
            raise OutOfDomain(f"parameters must be positive: {self}")


def wyss_raw(wp: WyssParams) -> Tuple[int, int, int, int]:
    """Signed (side, side, diagonal, diagonal); 2(a^2+b^2) = c^2+d^2 always."""
    k, m, n, p, q = wp.k, wp.m, wp.n, wp.p, wp.q
    a = k * (n * q - m * p)
    b = k * (m * q + n * p)
    c = k * (p * (m - n) + q * (m + n))
    d = k * (p * (n + m) + q * (n - m))
    return a, b, c, d


def wyss_parallelogram(wp: WyssParams) -> ParallelogramSpec:
    a, b, c, d = (abs(x) for x in wyss_raw(wp))
    if 0 in (a, b, c, d):
        raise OutOfDomain(f"{wp} gives a zero side or diagonal")
    if not (abs(a - b) < min(c, d) and max(c, d) < a + b):
        raise OutOfDomain(
            f"{wp} gives sides {(a, b)} and diagonals {(c, d)} that do not close"
        )
    return ParallelogramSpec.build(a, b, c)


def heron_sweep(bound: int) -> Iterator[Tuple[HeronParams, HeronTriangle]]:
    """In-domain tuples with all parameters in 1..bound, lexicographic order."""
    for m, n, p, q in itertools.product(range(1, bound + 1), repeat=4):
        hp = HeronParams(m, n, p, q)
        try:
            yield hp, heron_triangle(hp)
        except OutOfDomain:
            continue


def wyss_sweep(bound: int, k: int = 1) -> Iterator[Tuple[WyssParams, ParallelogramSpec]]:
    for m, n, p, q in itertools.product(range(1, bound + 1), repeat=4):
        wp = WyssParams(k, m, n, p, q)
        try:
            yield wp, wyss_parallelogram(wp)
        except OutOfDomain:
            continue
