"""Exact Gram-matrix geometry of the parallelepiped spanned by a tetrahedron.

A tetrahedron with edges ``(a, b, c, d, e, f)`` is read as three basis
vectors ``u, v, w`` from a common vertex with ``|u| = a``, ``|v| = c`` and
``|w| = e``; ``b``, ``d`` and ``f`` are the edges opposite the pairs
``(u, v)``, ``(u, w)`` and ``(v, w)``.  The law of cosines gives every dot
product as an exact rational, so all squared lengths, squared areas and the
squared volume of the spanned parallelepiped follow without surds.

Coordinates (:func:`embed_coordinates`) are floating point and only used for
display and cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple

Coeffs = Tuple[int, int, int]

# Piped vertex label -> coefficients of (u, v, w).
VERTEX_COEFFS: Dict[int, Coeffs] = {
    1: (0, 0, 0),
    2: (1, 0, 0),
    3: (0, 1, 0),
    4: (1, 1, 0),
    5: (0, 0, 1),
    6: (1, 0, 1),
    7: (0, 1, 1),
    8: (1, 1, 1),
}

FACE_PARALLELOGRAMS = ("1234", "5678", "1256", "3478", "1357", "2468")
BODY_PARALLELOGRAMS = ("1278", "1368", "1458", "2367", "2457", "3456")


class InvalidTetrahedron(ValueError):
    """Edge data that cannot close into a (possibly flat) tetrahedron."""

    def __init__(self, message: str, face: str = ""):
        super().__init__(message)
        self.face = face


class EdgeSextuple(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def faces(self) -> Tuple[Tuple[str, Tuple[int, int, int]], ...]:
        """The three faces through the spanning vertex, as (name, sides)."""
        return (
            ("(a,c,b)", (self.a, self.c, self.b)),
            ("(a,e,d)", (self.a, self.e, self.d)),
            ("(c,e,f)", (self.c, self.e, self.f)),
        )

    def __str__(self) -> str:
        return " ".join(str(x) for x in self)


def as_sextuple(edges: Iterable[int]) -> EdgeSextuple:
    values = tuple(edges)
    if len(values) != 6:
        raise InvalidTetrahedron(f"expected 6 edge lengths, got {len(values)}")
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidTetrahedron(f"edge lengths must be integers, got {x!r}")
        if x <= 0:
            raise InvalidTetrahedron(f"edge lengths must be positive, got {x}")
    return EdgeSextuple(*values)


def check_faces(s: EdgeSextuple) -> None:
    """Raise InvalidTetrahedron naming the first face that cannot close."""
    for name, (x, y, z) in s.faces():
        if x > y + z or y > x + z or z > x + y:
            raise InvalidTetrahedron(
                f"face {name} = ({x}, {y}, {z}) violates the triangle inequality",
                face=name,
            )


@dataclass(frozen=True)
class GramMatrix:
    guu: Fraction
    gvv: Fraction
    gww: Fraction
    guv: Fraction
    guw: Fraction
    gvw: Fraction

    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return (
            (self.guu, self.guv, self.guw),
            (self.guv, self.gvv, self.gvw),
            (self.guw, self.gvw, self.gww),
        )

    def off_diagonal(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.guv, self.guw, self.gvw


def gram_from_edges(edges: Iterable[int]) -> GramMatrix:
    s = as_sextuple(edges)
    check_faces(s)
    a2, b2, c2, d2, e2, f2 = (x * x for x in s)
    return GramMatrix(
        guu=Fraction(a2),
        gvv=Fraction(c2),
        gww=Fraction(e2),
        guv=Fraction(a2 + c2 - b2, 2),
        guw=Fraction(a2 + e2 - d2, 2),
        gvw=Fraction(c2 + e2 - f2, 2),
    )


def doubled_gram(s: EdgeSextuple) -> Tuple[int, int, int, int, int, int]:
    """Integer matrix 2G as (huu, hvv, hww, huv, huw, hvw); no validation."""
    a2, b2, c2, d2, e2, f2 = (x * x for x in s)
    return (2 * a2, 2 * c2, 2 * e2, a2 + c2 - b2, a2 + e2 - d2, c2 + e2 - f2)


def dot(g: GramMatrix, x: Sequence[int], y: Sequence[int]) -> Fraction:
    rows = g.rows()
    return sum(
        (x[i] * y[j] * rows[i][j] for i in range(3) for j in range(3)),
        Fraction(0),
    )


def squared_length(g: GramMatrix, coeffs: Sequence[int]) -> Fraction:
    if not any(coeffs):
        raise ValueError("zero coefficient vector")
    return dot(g, coeffs, coeffs)


def squared_parallelogram_area(
    g: GramMatrix, x: Sequence[int], y: Sequence[int]
) -> Fraction:
    xy = dot(g, x, y)
    return dot(g, x, x) * dot(g, y, y) - xy * xy


def squared_triangle_area(g: GramMatrix, p: Coeffs, q: Coeffs, r: Coeffs) -> Fraction:
    x = tuple(qi - pi for pi, qi in zip(p, q))
    y = tuple(ri - pi for pi, ri in zip(p, r))
    return squared_parallelogram_area(g, x, y) / 4


def volume_squared(g: GramMatrix) -> Fraction:
    """det(G), the squared volume of the parallelepiped."""
    (p, q, r), (_, s, t), (_, _, u) = g.rows()
    det = p * (s * u - t * t) - q * (q * u - t * r) + r * (q * t - s * r)
    if det < 0:
        raise InvalidTetrahedron(
            f"Gram determinant {det} is negative; the edges do not close in 3D"
        )
    return det


def vertex_distance_squared(g: GramMatrix, i: int, j: int) -> Fraction:
    p, q = VERTEX_COEFFS[i], VERTEX_COEFFS[j]
    return squared_length(g, tuple(b - a for a, b in zip(p, q)))


@dataclass(frozen=True)
class CoordinateEmbedding:
    """Float coordinates of the tetrahedron v1..v4 (v1 at the origin)."""

    v1: Tuple[float, float, float]
    v2: Tuple[float, float, float]
    v3: Tuple[float, float, float]
    v4: Tuple[float, float, float]

    @property
    def basis(self):
        return self.v2, self.v3, self.v4

    def piped_vertices(self) -> Dict[int, Tuple[float, float, float]]:
        u, v, w = self.basis
        out = {}
        for label, (i, j, k) in VERTEX_COEFFS.items():
            out[label] = tuple(
                math.fsum((i * u[n], j * v[n], k * w[n])) for n in range(3)
            )
        return out


def embed_coordinates(edges: Iterable[int]) -> CoordinateEmbedding:
    """Place the tetrahedron by intersecting spheres, taking the +z root."""
    s = as_sextuple(edges)
    check_faces(s)
    a, b, c, d, e, f = s
    g = gram_from_edges(s)
    # u along x, v in the xy-plane, w by three-sphere intersection
    cos_term = g.guv / a  # c*cos(B)
    r = float(cos_term)
    s_sq = Fraction(c * c) - cos_term * cos_term
    s_val = math.sqrt(max(float(s_sq), 0.0))
    x_exact = g.guw / a
    x = float(x_exact)
    if s_sq > 0:
        # y*s = (v.w - r*x); evaluated exactly before the single division
        y = float(g.gvw - cos_term * x_exact) / s_val
        z_sq = float(Fraction(e * e) - x_exact * x_exact - (g.gvw - cos_term * x_exact) ** 2 / s_sq)
    else:
        y = math.sqrt(max(float(Fraction(e * e) - x_exact * x_exact), 0.0))
        z_sq = 0.0
    z = math.sqrt(max(z_sq, 0.0))
    return CoordinateEmbedding(
        v1=(0.0, 0.0, 0.0),
        v2=(float(a), 0.0, 0.0),
        v3=(r, s_val, 0.0),
        v4=(x, y, z),
    )


def all_vertex_pairs() -> Iterable[Tuple[int, int]]:
    for i in range(1, 9):
        for j in range(i + 1, 9):
            yield i, j
