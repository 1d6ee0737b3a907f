"""Text forms of continued fractions and rationals.

Grammar for continued-fraction literals (whitespace insignificant):

    cf      := "[" INT ( (";" | ",") element ("," element)* )? "]"
    element := INT | group
    group   := "(" INT ("," INT)+ ")" "^" POSINT

A group repeats its string of integers inline, e.g. ``[1,(0,1)^3]`` parses
as ``[1,0,1,0,1,0,1]``.  Either ``;`` or ``,`` may follow the leading term;
the renderer always emits ``;``.  Every integer after the leading one must
be >= 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .contfrac import ContinuedFraction


class ParseError(ValueError):
    """A malformed literal, with the offending position (0-based)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(-?\d+|[\[\](),;^])")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[at]!r}", at)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    tokens.append(("", len(text)))  # end marker
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.i]

    def take(self, expected: str) -> tuple[str, int]:
        tok, pos = self.tokens[self.i]
        if tok != expected:
            found = repr(tok) if tok else "end of input"
            raise ParseError(f"expected {expected!r}, found {found}", pos)
        self.i += 1
        return tok, pos

    def take_int(self, minimum: int | None = None) -> int:
        tok, pos = self.tokens[self.i]
        if not re.fullmatch(r"-?\d+", tok or ""):
            found = repr(tok) if tok else "end of input"
            raise ParseError(f"expected an integer, found {found}", pos)
        value = int(tok)
        if minimum is not None and value < minimum:
            raise ParseError(f"expected an integer >= {minimum}, found {value}", pos)
        self.i += 1
        return value

    def parse_cf(self) -> ContinuedFraction:
        self.take("[")
        a0 = self.take_int()
        terms: list[int] = []
        tok, pos = self.peek()
        if tok in (";", ","):
            self.i += 1
            terms.extend(self.parse_element())
            while self.peek()[0] == ",":
                self.i += 1
                terms.extend(self.parse_element())
        self.take("]")
        tok, pos = self.peek()
        if tok:
            raise ParseError(f"trailing input {tok!r}", pos)
        return ContinuedFraction(a0, tuple(terms))

    def parse_element(self) -> list[int]:
        tok, pos = self.peek()
        if tok == "(":
            return self.parse_group()
        return [self.take_int(minimum=0)]

    def parse_group(self) -> list[int]:
        self.take("(")
        body = [self.take_int(minimum=0)]
        self.take(",")
        body.append(self.take_int(minimum=0))
        while self.peek()[0] == ",":
            self.i += 1
            body.append(self.take_int(minimum=0))
        self.take(")")
        self.take("^")
        count = self.take_int(minimum=1)
        return body * count


def parse_cf(text: str) -> ContinuedFraction:
    """Parse a continued-fraction literal; repetition groups are expanded inline."""
    return _Parser(text).parse_cf()


def render_cf(cf: ContinuedFraction) -> str:
    """Canonical text form, re-parseable by :func:`parse_cf`."""
    return str(cf)


_RATIONAL = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer as an exact rational."""
    m = _RATIONAL.match(text)
    if m is None:
        raise ParseError(f"expected a rational like 2/5 or 0, found {text!r}", 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError("denominator must be nonzero", m.start(2))
    return Fraction(num, den)
