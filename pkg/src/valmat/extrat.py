"""Extended rationals: exact ``Fraction`` values plus a bottom element ``NEG_INF``.

``NEG_INF`` is a singleton that compares below every rational and absorbs
addition.  It is never represented by a large negative number.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import SchemaError


class _NegInf:
    """The bottom element of the extended rationals."""

    _instance: "_NegInf | None" = None
    __slots__ = ()

    def __new__(cls) -> "_NegInf":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_NegInf, ())

    def __hash__(self) -> int:
        return hash("valmat.NEG_INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, Rational):
            return True
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if other is self or isinstance(other, Rational):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self or isinstance(other, Rational):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if other is self:
            return True
        if isinstance(other, Rational):
            return False
        return NotImplemented

    def __add__(self, other: object) -> "_NegInf":
        if other is self or isinstance(other, Rational):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "_NegInf":
        if isinstance(other, Rational):
            return self
        return NotImplemented

    def __neg__(self):
        raise ArithmeticError("negation of NEG_INF is not an extended rational")


NEG_INF = _NegInf()

ExtRat = Union[Fraction, _NegInf]


def is_finite(x: object) -> bool:
    return x is not NEG_INF


def ext(x) -> ExtRat:
    """Coerce ints, Fractions, strings or NEG_INF into an extended rational."""
    if x is NEG_INF:
        return NEG_INF
    if isinstance(x, str):
        return parse_ext(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not extended rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact extended rational")


def ext_max(values: Iterable[ExtRat]) -> ExtRat:
    best: ExtRat = NEG_INF
    for v in values:
        if v is not NEG_INF and (best is NEG_INF or v > best):
            best = v
    return best


def format_ext(x: ExtRat) -> str:
    """Canonical string: ``"-inf"`` or ``"p/q"`` in lowest terms (``q`` may be 1)."""
    if x is NEG_INF:
        return "-inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_ext(s: str) -> ExtRat:
    s = s.strip()
    if s == "-inf":
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not an exact rational: {s!r}") from exc
