"""Relabelings of one tetrahedron that span the same parallelepiped.

Permuting the three basis vectors gives 6 labelings.  Negating one of them
swaps two face diagonals for their partners (``x -> x^`` with
``x^ = sqrt(2(p^2+q^2) - x^2)`` on the face with sides p, q), giving 4 sign
patterns each.  The 24 rows below are all combinations; a row survives only
when every entry is a positive integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .exactnum import exact_isqrt
from .geometry import EdgeSextuple, as_sextuple, check_faces

# Each row lists the six slots of the new sextuple in terms of the old one;
# a trailing "^" selects the partner diagonal.
FAMILY_ROWS: Tuple[Tuple[str, ...], ...] = tuple(
    tuple(row.split())
    for row in (
        "a b c d e f",     "a b c d^ e f^",   "a b^ c d e f^",   "a b^ c d^ e f",
        "a d e b c f",     "a d^ e b c f^",   "a d e b^ c f^",   "a d^ e b^ c f",
        "c b a f e d",     "c b a f^ e d^",   "c b^ a f e d^",   "c b^ a f^ e d",
        "c f e b a d",     "c f e b^ a d^",   "c f^ e b a d^",   "c f^ e b^ a d",
        "e d a f c b",     "e d a f^ c b^",   "e d^ a f c b^",   "e d^ a f^ c b",
        "e f c d a b",     "e f c d^ a b^",   "e f^ c d a b^",   "e f^ c d^ a b",
    )
)


def partner_diagonals(s: EdgeSextuple) -> Dict[str, Optional[int]]:
    """b^, d^, f^ as integers, or None where irrational or zero."""
    a, b, c, d, e, f = s

    def hat(p: int, q: int, x: int) -> Optional[int]:
        root = exact_isqrt(2 * (p * p + q * q) - x * x)
        return root if root else None

    return {"b^": hat(a, c, b), "d^": hat(a, e, d), "f^": hat(c, e, f)}


def _evaluate(row: Tuple[str, ...], values: Dict[str, Optional[int]]) -> Optional[EdgeSextuple]:
    out = [values[token] for token in row]
    if any(x is None for x in out):
        return None
    return EdgeSextuple(*out)


@dataclass(frozen=True)
class TetraFamily:
    origin: EdgeSextuple
    members: FrozenSet[EdgeSextuple]
    irrational_rows: int

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self):
        return sorted(self.members)

    @property
    def canonical(self) -> EdgeSextuple:
        return min(self.members)


def family_members(s: EdgeSextuple) -> Tuple[FrozenSet[EdgeSextuple], int]:
    """Distinct members and the count of rows dropped for irrational partners.

    Expects a validated sextuple; used directly by the search hot loop.
    """
    values: Dict[str, Optional[int]] = dict(zip("abcdef", s))
    values.update(partner_diagonals(s))
    members = set()
    dropped = 0
    for row in FAMILY_ROWS:
        member = _evaluate(row, values)
        if member is None:
            dropped += 1
        else:
            members.add(member)
    return frozenset(members), dropped


def tetra_family(edges: Iterable[int]) -> TetraFamily:
    s = as_sextuple(edges)
    check_faces(s)
    members, dropped = family_members(s)
    return TetraFamily(s, members, dropped)


def canonical_form(edges: Iterable[int]) -> EdgeSextuple:
    """Lexicographically least family member."""
    return tetra_family(edges).canonical
