"""Exact arithmetic on the rationals extended by a single point at infinity.

Continued fractions with zero partial quotients cannot be evaluated with
ordinary rational arithmetic: subexpressions like ``1/0`` appear and must be
read as the point at infinity of the one-point compactification of the reals.
This module provides that partially defined arithmetic.  The two operations
needed by continued-fraction evaluation are addition and reciprocal, with

    x + inf = inf            (x finite)
    1/0     = inf
    1/inf   = 0
    inf + inf = undefined

``undefined`` is an absorbing value rather than an exception, so evaluation
stays total; callers that must not see it assert on the result.  All values
are immutable and all operations pure.

Rationals themselves are :class:`fractions.Fraction`, which already stores
every value reduced with a positive denominator and compares in real-number
order, so no separate rational type is defined here.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

_FINITE = 0
_INFINITE = 1
_UNDEFINED = 2


class ExtendedRational:
    """A rational number, the (unsigned) point at infinity, or ``undefined``.

    There is exactly one infinity; negative infinity does not exist in this
    arithmetic.  Use :func:`finite`, :data:`INFINITY` and :data:`UNDEFINED`
    to obtain instances.
    """

    __slots__ = ("_kind", "_value")

    def __init__(self, kind: int, value: Fraction | None):
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    @property
    def is_finite(self) -> bool:
        return self._kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self._kind == _INFINITE

    @property
    def is_undefined(self) -> bool:
        return self._kind == _UNDEFINED

    @property
    def value(self) -> Fraction:
        """The finite rational value; raises on ``inf`` and ``undefined``."""
        if self._kind != _FINITE:
            raise ValueError(f"no finite value: {self}")
        return self._value

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtendedRational):
            return self._kind == other._kind and self._value == other._value
        if isinstance(other, _RationalABC):
            return self._kind == _FINITE and self._value == other
        return NotImplemented

    def __hash__(self):
        return hash((self._kind, self._value))

    def __add__(self, other):
        return add(self, as_extended(other))

    __radd__ = __add__

    def __repr__(self) -> str:
        return f"ExtendedRational({self})"

    def __str__(self) -> str:
        if self._kind == _INFINITE:
            return "inf"
        if self._kind == _UNDEFINED:
            return "undefined"
        return str(self._value)


INFINITY = ExtendedRational(_INFINITE, None)
UNDEFINED = ExtendedRational(_UNDEFINED, None)


def finite(x) -> ExtendedRational:
    """Wrap an int or Fraction as a finite extended rational."""
    # Fraction is immutable, so an existing one can be shared as-is.
    value = x if type(x) is Fraction else Fraction(x)
    return ExtendedRational(_FINITE, value)


def as_extended(x) -> ExtendedRational:
    """Coerce ints and Fractions; pass ExtendedRational through."""
    if isinstance(x, ExtendedRational):
        return x
    return finite(x)


def add(x: ExtendedRational, y: ExtendedRational) -> ExtendedRational:
    """Partial addition: finite+finite exactly, finite+inf = inf, inf+inf undefined."""
    x, y = as_extended(x), as_extended(y)
    if x.is_undefined or y.is_undefined:
        return UNDEFINED
    if x.is_infinite and y.is_infinite:
        return UNDEFINED
    if x.is_infinite or y.is_infinite:
        return INFINITY
    return finite(x.value + y.value)


def reciprocal(x: ExtendedRational) -> ExtendedRational:
    """Partial reciprocal: 1/0 = inf and 1/inf = 0; undefined is absorbing."""
    x = as_extended(x)
    if x.is_undefined:
        return UNDEFINED
    if x.is_infinite:
        return finite(0)
    if x.value == 0:
        return INFINITY
    return finite(1 / x.value)
