"""Exact integer and rational square roots.

Python ints are arbitrary precision and ``fractions.Fraction`` is always
stored reduced with a positive denominator, so those two types serve as the
big-integer and rational types for the whole package.  Every rationality
decision made elsewhere reduces to :func:`is_square` or :func:`sqrt_rational`.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def _residues(modulus: int) -> frozenset:
    return frozenset((k * k) % modulus for k in range(modulus))


# Squares mod 64, 63, 65 and 11; a non-residue proves "not a square" cheaply.
_FILTERS = tuple((m, _residues(m)) for m in (64, 63, 65, 11))


def int_sqrt(n: int) -> Tuple[int, bool]:
    """Return ``(floor(sqrt(n)), exact)`` for a non-negative integer."""
    if n < 0:
        raise ValueError(f"int_sqrt of negative number {n}")
    root = isqrt(n)
    return root, root * root == n


def is_square(n: int) -> bool:
    """True iff ``n`` is the square of an integer (``0`` counts)."""
    if n < 0:
        return False
    for modulus, squares in _FILTERS:
        if n % modulus not in squares:
            return False
    root = isqrt(n)
    return root * root == n


def exact_isqrt(n: int) -> Optional[int]:
    """The integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if not is_square(n):
        return None
    return isqrt(n)


def sqrt_rational(q: RationalLike) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None when irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"sqrt_rational of negative number {q}")
    num = exact_isqrt(q.numerator)
    if num is None:
        return None
    den = exact_isqrt(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def is_rational_square(q: RationalLike) -> bool:
    q = Fraction(q)
    return q >= 0 and is_square(q.numerator) and is_square(q.denominator)


def sign(q: RationalLike) -> int:
    return (q > 0) - (q < 0)
