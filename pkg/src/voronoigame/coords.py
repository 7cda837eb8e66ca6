"""Exact coordinates.

All geometry in this package is exact: coordinates are `fractions.Fraction`
values and every comparison is decided by integer arithmetic.  Floating
point appears nowhere in the computation path; floats are accepted on input
only when they are finite, and are converted to their exact binary value.

Two sentinel objects NEG_INF and POS_INF extend the rational line at both
ends.  They order correctly against every Fraction and against each other,
but deliberately support no arithmetic, so an infinity leaking into a
computation fails loudly instead of silently degrading to float math.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import InvalidInstance

Coord = Fraction


class _Infinity:
    """Totally ordered sentinel; refuses arithmetic."""

    __slots__ = ("_sign",)

    def __init__(self, sign: int):
        self._sign = sign  # -1 or +1

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, _Infinity):
            return self._sign < other._sign
        return self._sign < 0

    def __le__(self, other):
        return self is other or self < other

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, _Infinity):
            return self._sign > other._sign
        return self._sign > 0

    def __ge__(self, other):
        return self is other or self > other

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash(("voronoigame-inf", self._sign))

    def __repr__(self):
        return "+inf" if self._sign > 0 else "-inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(+1)

ExtendedCoord = Union[Coord, _Infinity]


def is_finite(x: ExtendedCoord) -> bool:
    return not isinstance(x, _Infinity)


def ext_key(x: ExtendedCoord):
    """Sort key usable when mixing ExtendedCoord with plain tuples."""
    if x is NEG_INF:
        return (-1, Fraction(0))
    if x is POS_INF:
        return (1, Fraction(0))
    return (0, x)


def parse_coord(value) -> Coord:
    """Convert an input coordinate to an exact Fraction.

    Accepts int, Fraction, "num/den" or decimal strings, and finite floats
    (converted exactly).  Anything non-finite or unparsable raises
    InvalidInstance.
    """
    if isinstance(value, bool):
        raise InvalidInstance(f"not a coordinate: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidInstance(f"non-finite coordinate: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInstance(f"cannot parse coordinate {value!r}") from exc
    raise InvalidInstance(f"unsupported coordinate type: {type(value).__name__}")


def format_coord(x: Coord):
    """JSON-friendly form: plain int when integral, else "num/den"."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def format_extended(x: ExtendedCoord) -> str:
    if x is NEG_INF:
        return "-inf"
    if x is POS_INF:
        return "+inf"
    return f"{x.numerator}/{x.denominator}"
