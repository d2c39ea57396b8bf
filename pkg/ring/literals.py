"""
Parser for scalar and twisted Laurent polynomial literals.

Grammar (whitespace-insensitive)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' ['-'] integer]
    atom   := number ['/' number] | 'g' | 'i' | 'j' | 'k' | 't' | '(' expr ')'

Products are evaluated left to right in D_tau, so ``t*g`` is tau(g) t while
``g*t`` is g t.
"""

import re
from fractions import Fraction

from .exceptions import DomainError, ParseError
from .laurent import LaurentPoly
from .scalars import DivisionRing, FiniteField, QuaternionAlgebra, Scalar

TOKEN = re.compile(r'\s*(?:(\d+)|(.))')

QUATERNION_UNITS = {'i': 1, 'j': 2, 'k': 3}


def tokenize(text: str, offset: int = 0) -> list[tuple[str, str, int]]:
    tokens = []
    for match in TOKEN.finditer(text):
        number, symbol = match.groups()
        position = offset + match.start(1 if number else 2)
        if number:
            tokens.append(('num', number, position))
        elif symbol is not None and not symbol.isspace():
            tokens.append(('sym', symbol, position))
    tokens.append(('end', '', offset + len(text)))
    return tokens


class LiteralParser:
    """Recursive-descent evaluator producing LaurentPoly values."""

    def __init__(self, ring: DivisionRing, text: str, offset: int = 0):
        self.ring = ring
        self.text = text
        self.tokens = tokenize(text, offset)
        self.index = 0

    @property
    def current(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.current[2], self.text)

    def accept(self, symbol: str) -> bool:
        kind, value, _ = self.current
        if kind == 'sym' and value == symbol:
            self.index += 1
            return True
        return False

    def expect(self, symbol: str) -> None:
        if not self.accept(symbol):
            raise self.error(f"Expected '{symbol}'")

    def parse(self) -> LaurentPoly:
        value = self.expression()
        if self.current[0] != 'end':
            raise self.error(f"Unexpected '{self.current[1]}'")
        return value

    def expression(self) -> LaurentPoly:
        negative = False
        if self.accept('-'):
            negative = True
        else:
            self.accept('+')
        value = self.term()
        if negative:
            value = -value
        while True:
            if self.accept('+'):
                value = value + self.term()
            elif self.accept('-'):
                value = value - self.term()
            else:
                return value

    def term(self) -> LaurentPoly:
        value = self.factor()
        while self.accept('*'):
            value = value * self.factor()
        return value

    def factor(self) -> LaurentPoly:
        base = self.atom()
        if not self.accept('^'):
            return base
        negative = self.accept('-')
        kind, value, _ = self.current
        if kind != 'num':
            raise self.error("Expected an integer exponent")
        self.index += 1
        exponent = -int(value) if negative else int(value)
        try:
            return base ** exponent
        except DomainError as e:
            raise self.error(str(e)) from e

    def atom(self) -> LaurentPoly:
        kind, value, _ = self.current
        ring = self.ring
        if kind == 'num':
            self.index += 1
            scalar = self._number(int(value))
            if self.accept('/'):
                kind, denominator, _ = self.current
                if kind != 'num' or int(denominator) == 0:
                    raise self.error("Expected a nonzero denominator")
                self.index += 1
                if isinstance(ring, FiniteField):
                    try:
                        scalar = scalar * self._number(int(denominator)).inverse()
                    except DomainError as e:
                        raise self.error(str(e)) from e
                else:
                    scalar = ring.from_int(Fraction(int(value), int(denominator)))
            return LaurentPoly.constant(ring, scalar)
        if kind == 'sym':
            if value == '(':
                self.index += 1
                inner = self.expression()
                self.expect(')')
                return inner
            if value == 't':
                self.index += 1
                return LaurentPoly.t_power(ring, 1)
            if value == 'g' and isinstance(ring, FiniteField) and ring.k > 1:
                self.index += 1
                return LaurentPoly.constant(ring, ring.generator)
            if value in QUATERNION_UNITS and isinstance(ring, QuaternionAlgebra):
                self.index += 1
                return LaurentPoly.constant(ring, ring.basis(QUATERNION_UNITS[value]))
        raise self.error(f"Unknown ring literal '{value}'")

    def _number(self, value: int) -> Scalar:
        return self.ring.from_int(value)


def parse_poly(ring: DivisionRing, text: str, offset: int = 0) -> LaurentPoly:
    """Parse a Laurent polynomial literal such as ``g*t^2+1``."""
    return LiteralParser(ring, text, offset).parse()


def parse_scalar(ring: DivisionRing, text: str, offset: int = 0) -> Scalar:
    """Parse an element of D (no ``t`` allowed after evaluation)."""
    value = parse_poly(ring, text, offset)
    if not value.is_constant():
        raise ParseError(f"'{text}' is not an element of D", offset, text)
    return value.coefficient(0)


def parse_unit(ring: DivisionRing, text: str, offset: int = 0) -> LaurentPoly:
    value = parse_poly(ring, text, offset)
    if not value.is_unit():
        raise ParseError(f"'{text}' is not a unit s*t^k", offset, text)
    return value
