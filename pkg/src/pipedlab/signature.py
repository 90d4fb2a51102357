"""Rationality signature of a parallelepiped.

Twenty-six yes/no checks plus a ternary volume flag, in seven groups:

    edges      a, c, e                               (always rational here)
    skew       triangles 146, 147, 167, 467
    face_diag  b, b^, d, d^, f, f^   (x^ is the partner diagonal of x's face)
    body_diag  |u+v+w|, |-u+v+w|, |u-v+w|, |u+v-w|
    face_area  |u x v|, |u x w|, |v x w|
    body_area  B1278, B1368, B1458, B2367, B2457, B3456
    volume     -1 flat, 0 irrational, 1 rational

The serialized form is 26 characters of '0'/'1' followed by one volume
character ('-', '0' or '1').

All checks run on the integer matrix ``H = 2G`` so no fractions are built:
squared lengths are ``xHx / 2`` (always an integer), four times a squared
area is ``xHx*yHy - (xHy)^2`` and ``det G = det H / 8``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Tuple

from .exactnum import is_square
from .geometry import (
    EdgeSextuple,
    InvalidTetrahedron,
    as_sextuple,
    check_faces,
    doubled_gram,
    gram_from_edges,
    squared_length,
    squared_parallelogram_area,
    volume_squared,
)

SKEW_TRIANGLES = ("146", "147", "167", "467")
# Congruent partner of each skew triangle under x -> u+v+w-x.
SKEW_PARTNERS = {"146": "853", "147": "852", "167": "832", "467": "532"}

EDGE_COEFFS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
SKEW_SPANS = (
    ((1, 1, 0), (1, 0, 1)),
    ((1, 1, 0), (0, 1, 1)),
    ((1, 0, 1), (0, 1, 1)),
    ((0, -1, 1), (-1, 0, 1)),
)
FACE_DIAG_COEFFS = (
    (1, -1, 0), (1, 1, 0),
    (1, 0, -1), (1, 0, 1),
    (0, 1, -1), (0, 1, 1),
)
BODY_DIAG_COEFFS = ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))
FACE_SPANS = (
    ((1, 0, 0), (0, 1, 0)),
    ((1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1)),
)
BODY_SPANS = (
    ((1, 0, 0), (0, 1, 1)),   # B1278
    ((0, 1, 0), (1, 0, 1)),   # B1368
    ((0, 0, 1), (1, 1, 0)),   # B1458
    ((-1, 1, 0), (0, 0, 1)),  # B2367
    ((0, 1, 0), (-1, 0, 1)),  # B2457
    ((1, 0, 0), (0, -1, 1)),  # B3456
)

GROUP_SIZES = (("edges", 3), ("skew", 4), ("face_diag", 6), ("body_diag", 4),
               ("face_area", 3), ("body_area", 6))
VOLUME_CHARS = {-1: "-", 0: "0", 1: "1"}


class CategoryKey(NamedTuple):
    skew: int
    face_diag: int
    body_diag: int
    face_area: int
    body_area: int
    volume: int


@dataclass(frozen=True)
class ComponentSignature:
    edges: Tuple[bool, ...]
    skew: Tuple[bool, ...]
    face_diag: Tuple[bool, ...]
    body_diag: Tuple[bool, ...]
    face_area: Tuple[bool, ...]
    body_area: Tuple[bool, ...]
    volume: int

    def bits(self) -> Tuple[bool, ...]:
        return (self.edges + self.skew + self.face_diag + self.body_diag
                + self.face_area + self.body_area)

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits()) + VOLUME_CHARS[self.volume]

    @classmethod
    def from_string(cls, text: str) -> "ComponentSignature":
        if len(text) != 27 or any(ch not in "01" for ch in text[:26]):
            raise ValueError(f"malformed signature string {text!r}")
        volume = {v: k for k, v in VOLUME_CHARS.items()}.get(text[26])
        if volume is None:
            raise ValueError(f"malformed volume flag in {text!r}")
        flags = [ch == "1" for ch in text[:26]]
        groups = {}
        pos = 0
        for name, size in GROUP_SIZES:
            groups[name] = tuple(flags[pos:pos + size])
            pos += size
        return cls(volume=volume, **groups)

    def __str__(self) -> str:
        return self.to_string()


def _quad(h, x, y) -> int:
    huu, hvv, hww, huv, huw, hvw = h
    return (x[0] * (huu * y[0] + huv * y[1] + huw * y[2])
            + x[1] * (huv * y[0] + hvv * y[1] + hvw * y[2])
            + x[2] * (huw * y[0] + hvw * y[1] + hww * y[2]))


def _length_is_rational(h, x) -> bool:
    return is_square(_quad(h, x, x) // 2)


def _area_is_rational(h, x, y) -> bool:
    xy = _quad(h, x, y)
    return is_square(_quad(h, x, x) * _quad(h, y, y) - xy * xy)


def doubled_gram_det(h) -> int:
    huu, hvv, hww, huv, huw, hvw = h
    return (huu * (hvv * hww - hvw * hvw) - huv * (huv * hww - hvw * huw)
            + huw * (huv * hvw - hvv * huw))


def volume_flag_from_det(det_h: int) -> int:
    if det_h == 0:
        return -1
    return 1 if is_square(2 * det_h) else 0


def body_diagonals_rational(s: EdgeSextuple) -> Tuple[bool, ...]:
    """The four body-diagonal checks alone; cheap prefilter for searches."""
    h = doubled_gram(s)
    return tuple(_length_is_rational(h, x) for x in BODY_DIAG_COEFFS)


def compute_signature(edges: Iterable[int]) -> ComponentSignature:
    s = as_sextuple(edges)
    check_faces(s)
    return signature_unchecked(s)


def signature_unchecked(s: EdgeSextuple) -> ComponentSignature:
    h = doubled_gram(s)
    det_h = doubled_gram_det(h)
    if det_h < 0:
        raise InvalidTetrahedron(f"edges {tuple(s)} do not close into a tetrahedron (det < 0)")
    return ComponentSignature(
        edges=tuple(_length_is_rational(h, x) for x in EDGE_COEFFS),
        skew=tuple(_area_is_rational(h, x, y) for x, y in SKEW_SPANS),
        face_diag=tuple(_length_is_rational(h, x) for x in FACE_DIAG_COEFFS),
        body_diag=tuple(_length_is_rational(h, x) for x in BODY_DIAG_COEFFS),
        face_area=tuple(_area_is_rational(h, x, y) for x, y in FACE_SPANS),
        body_area=tuple(_area_is_rational(h, x, y) for x, y in BODY_SPANS),
        volume=volume_flag_from_det(det_h),
    )


def category_of(sig: ComponentSignature) -> CategoryKey:
    return CategoryKey(
        skew=sum(sig.skew),
        face_diag=sum(sig.face_diag),
        body_diag=sum(sig.body_diag),
        face_area=sum(sig.face_area),
        body_area=sum(sig.body_area),
        volume=sig.volume,
    )


def is_perfect(sig: ComponentSignature) -> bool:
    return all(sig.face_diag) and all(sig.body_diag)


def squared_components(edges: Iterable[int]) -> Tuple[Fraction, ...]:
    """Exact squared values behind the 26 checks, then det(G).

    Triangle entries are squared triangle areas (parallelogram / 4).
    """
    g = gram_from_edges(edges)
    values = [squared_length(g, x) for x in EDGE_COEFFS]
    values += [squared_parallelogram_area(g, x, y) / 4 for x, y in SKEW_SPANS]
    values += [squared_length(g, x) for x in FACE_DIAG_COEFFS]
    values += [squared_length(g, x) for x in BODY_DIAG_COEFFS]
    values += [squared_parallelogram_area(g, x, y) for x, y in FACE_SPANS]
    values += [squared_parallelogram_area(g, x, y) for x, y in BODY_SPANS]
    values.append(volume_squared(g))
    return tuple(values)
