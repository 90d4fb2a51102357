"""Five-class orthogonality scheme.

A parallelepiped is classified by the signs of the cosines of the three
surface angles at its spanning vertex, i.e. the signs of the off-diagonal
Gram entries.  :func:`classify` is a closed form (count zeros, then parity of
the negative signs); :func:`enumerate_vertex_classes` rebuilds the classes
from the per-vertex supplement table so the closed form can be checked
against it on all 27 sign triples.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Iterable, NamedTuple, Tuple

from .exactnum import sign
from .geometry import GramMatrix, gram_from_edges

ACUTE = "acute"
OBTUSE = "obtuse"
MONO_ORTHO = "1-ortho"
BI_ORTHO = "2-ortho"
RECTANGULAR = "rectangular"

CLASS_NAMES = (ACUTE, OBTUSE, MONO_ORTHO, BI_ORTHO, RECTANGULAR)
LONG_NAMES = {
    ACUTE: "acute triclinic",
    OBTUSE: "obtuse triclinic",
    MONO_ORTHO: "1-ortho biclinic",
    BI_ORTHO: "2-ortho monoclinic",
    RECTANGULAR: "rectangular",
}

SignTriple = Tuple[int, int, int]
VertexGroup = FrozenSet[SignTriple]


class SignVector(NamedTuple):
    """Signs of cos(angle) for the (u,v), (u,w) and (v,w) angles."""

    ab: int
    ac: int
    bc: int


def sign_vector(g: GramMatrix) -> SignVector:
    return SignVector(sign(g.guv), sign(g.guw), sign(g.gvw))


def classify(sv: Iterable[int]) -> str:
    sv = tuple(sv)
    zeros = sv.count(0)
    if zeros == 3:
        return RECTANGULAR
    if zeros == 2:
        return BI_ORTHO
    if zeros == 1:
        return MONO_ORTHO
    return OBTUSE if sv.count(-1) % 2 else ACUTE


def classify_edges(edges: Iterable[int]) -> str:
    return classify(sign_vector(gram_from_edges(edges)))


# Angles at each of the 8 vertices in terms of the three angles at the
# origin: P = angle(a, c), Q = angle(a, b), R = angle(c, b), where a runs
# v1->v2, b runs v1->v5 and c runs v1->v3.  A leading "-" means the
# supplement of that angle.
VERTEX_ANGLES = {
    1: ("P", "Q", "R"),
    2: ("-P", "-Q", "R"),
    3: ("-P", "-R", "Q"),
    4: ("P", "-R", "-Q"),
    5: ("-Q", "-R", "P"),
    6: ("Q", "-R", "-P"),
    7: ("R", "-Q", "-P"),
    8: ("R", "Q", "P"),
}


def vertex_groups(sv: Iterable[int]) -> VertexGroup:
    """Set of sorted sign triples realized over the 8 vertices.

    A supplement flips the sign of the cosine and leaves 0 fixed.
    """
    s_ab, s_ac, s_bc = tuple(sv)
    base = {"P": s_ac, "Q": s_ab, "R": s_bc}
    group = set()
    for angles in VERTEX_ANGLES.values():
        triple = tuple(
            -base[name[1:]] if name.startswith("-") else base[name]
            for name in angles
        )
        group.add(tuple(sorted(triple)))
    return frozenset(group)


# Vertex groups of the five classes, written out explicitly.
CLASS_GROUPS: Dict[str, VertexGroup] = {
    RECTANGULAR: frozenset({(0, 0, 0)}),
    BI_ORTHO: frozenset({(-1, 0, 0), (0, 0, 1)}),
    MONO_ORTHO: frozenset({(-1, -1, 0), (-1, 0, 1), (0, 1, 1)}),
    OBTUSE: frozenset({(-1, -1, -1), (-1, 1, 1)}),
    ACUTE: frozenset({(-1, -1, 1), (1, 1, 1)}),
}


def class_of_group(group: VertexGroup) -> str:
    for name, known in CLASS_GROUPS.items():
        if group == known:
            return name
    raise ValueError(f"unexpected vertex group {sorted(group)}")


def enumerate_vertex_classes() -> Dict[SignTriple, VertexGroup]:
    """Vertex group of every one of the 27 sign triples at the origin."""
    return {
        sv: vertex_groups(sv)
        for sv in itertools.product((-1, 0, 1), repeat=3)
    }

