"""
Parser for words on the command line.

Three alphabets share one letter syntax, ``head[indices](arguments)^-1``,
with letters joined by ``*``:

    elementary   x[i,j](g)  w[i,j](u)  h[i,j](u)  xa[i,j,m](f)  wa[i,j,m](f)  ha[i,j,m](f)
    steinberg    X[i,j](g)  hw[i,j](u)  hh[i,j](u)  hc(u,v)  hc[i,j](u,v)
    symbol       c(u,v)

Arguments are ring literals (see ``ring.literals``).  ``^-1`` inverts the
letter: x(f)^-1 = x(-f), and h letters keep the exponent.  Positions in
parse errors index into the original text.
"""

import logging
import re
from dataclasses import dataclass
from typing import Optional, Union

from linear.generators import GeneratorLetter, GroupWord
from ring.exceptions import DomainError, ParseError
from ring.literals import parse_poly, parse_scalar, parse_unit
from ring.scalars import DivisionRing
from roots.affine import AffineRoot, FiniteRoot
from steinberg.words import StWord, hat_c, hat_h, hat_w, hat_x
from symbols.words import SymbolWord, presentation_for

logger = logging.getLogger(__name__)

ELEMENTARY = 'elementary'
STEINBERG = 'steinberg'
SYMBOL = 'symbol'
ALPHABETS = (ELEMENTARY, STEINBERG, SYMBOL)

HEADS = {
    ELEMENTARY: ('xa', 'wa', 'ha', 'x', 'w', 'h'),
    STEINBERG: ('hw', 'hh', 'hc', 'X'),
    SYMBOL: ('c',),
}

HEAD = re.compile(r'\s*([A-Za-z]+)\s*')
INDICES = re.compile(r'\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*')
INVERSE = re.compile(r'\s*\^\s*-\s*1')

Word = Union[GroupWord, StWord, SymbolWord]


@dataclass(frozen=True)
class RawLetter:
    head: str
    indices: tuple[int, ...]
    arguments: tuple[tuple[str, int], ...]
    inverted: bool
    position: int


class LetterScanner:
    """Splits a word into raw letters, remembering where each argument starts."""

    def __init__(self, text: str, heads: tuple[str, ...]):
        self.text = text
        self.heads = heads
        self.position = 0

    def error(self, message: str, position: Optional[int] = None) -> ParseError:
        return ParseError(message, self.position if position is None else position, self.text)

    def at_end(self) -> bool:
        return not self.text[self.position:].strip()

    def letters(self) -> list[RawLetter]:
        if self.at_end() or self.text.strip() == '1':
            return []
        letters = [self.letter()]
        while not self.at_end():
            self.skip_space()
            if self.text[self.position] != '*':
                raise self.error(f"Expected '*' between letters, found '{self.text[self.position]}'")
            self.position += 1
            letters.append(self.letter())
        return letters

    def skip_space(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def letter(self) -> RawLetter:
        match = HEAD.match(self.text, self.position)
        if not match or match.group(1) not in self.heads:
            found = match.group(1) if match else self.text[self.position:self.position + 1]
            raise self.error(f"Unknown letter '{found}'", match.start(1) if match else None)
        start, head = match.start(1), match.group(1)
        self.position = match.end()
        indices = ()
        match = INDICES.match(self.text, self.position)
        if match:
            indices = tuple(int(part) for part in match.group(1).split(','))
            self.position = match.end()
        arguments = self.arguments()
        match = INVERSE.match(self.text, self.position)
        inverted = bool(match)
        if match:
            self.position = match.end()
        return RawLetter(head, indices, arguments, inverted, start)

    def arguments(self) -> tuple[tuple[str, int], ...]:
        if self.position >= len(self.text) or self.text[self.position] != '(':
            raise self.error("Expected '('")
        depth, begin = 0, self.position + 1
        parts = []
        for index in range(self.position, len(self.text)):
            char = self.text[index]
            if char == '(':
                depth += 1
            elif char == ')':
                depth -= 1
                if depth == 0:
                    parts.append((self.text[begin:index], begin))
                    self.position = index + 1
                    return tuple(parts)
            elif char == ',' and depth == 1:
                parts.append((self.text[begin:index], begin))
                begin = index + 1
        raise self.error("Unbalanced parentheses")


def _arity(raw: RawLetter, text: str, count: int) -> None:
    if len(raw.arguments) != count:
        raise ParseError(f"{raw.head} takes {count} argument(s), got {len(raw.arguments)}", raw.position, text)


def _indices(raw: RawLetter, text: str, count: int, n: int) -> tuple[int, ...]:
    if len(raw.indices) != count:
        raise ParseError(f"{raw.head} needs {count} indices", raw.position, text)
    i, j = raw.indices[:2]
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ParseError(f"Indices ({i},{j}) are not a root for n={n}", raw.position, text)
    return raw.indices


def _elementary_letter(ring: DivisionRing, n: int, raw: RawLetter, text: str) -> GeneratorLetter:
    _arity(raw, text, 1)
    argument, offset = raw.arguments[0]
    if raw.head.endswith('a'):
        i, j, m = _indices(raw, text, 3, n)
        letter = GeneratorLetter(raw.head, AffineRoot.of(i, j, m), parse_scalar(ring, argument, offset))
    else:
        i, j = _indices(raw, text, 2, n)
        if raw.head == 'x':
            payload = parse_poly(ring, argument, offset)
        else:
            payload = parse_unit(ring, argument, offset)
        letter = GeneratorLetter(raw.head, FiniteRoot(i, j), payload)
    return letter.inverse() if raw.inverted else letter


def _steinberg_letter(ring: DivisionRing, n: int, raw: RawLetter, text: str) -> StWord:
    if raw.head == 'hc':
        _arity(raw, text, 2)
        i, j = _indices(raw, text, 2, n) if raw.indices else (1, 2)
        (u, u_at), (v, v_at) = raw.arguments
        word = hat_c(n, parse_unit(ring, u, u_at), parse_unit(ring, v, v_at), i, j)
    else:
        _arity(raw, text, 1)
        i, j = _indices(raw, text, 2, n)
        argument, offset = raw.arguments[0]
        if raw.head == 'X':
            word = hat_x(n, i, j, parse_poly(ring, argument, offset))
        else:
            build = hat_w if raw.head == 'hw' else hat_h
            word = build(n, i, j, parse_unit(ring, argument, offset))
    return word.inverse() if raw.inverted else word


def _symbol_letter(ring: DivisionRing, presentation: str, raw: RawLetter, text: str) -> SymbolWord:
    _arity(raw, text, 2)
    if raw.indices:
        raise ParseError("c takes no indices", raw.position, text)
    (u, u_at), (v, v_at) = raw.arguments
    power = -1 if raw.inverted else 1
    return SymbolWord.of(ring, parse_unit(ring, u, u_at), parse_unit(ring, v, v_at), power, presentation)


def parse_word(ring: DivisionRing, text: str, alphabet: str, n: int = 2) -> Word:
    """Parse ``text`` as a word of the given alphabet over ``ring`` in rank ``n``."""
    if alphabet not in ALPHABETS:
        raise ParseError(f"Unknown alphabet '{alphabet}'", 0, text)
    if n < 2:
        raise DomainError(f"Words need n >= 2, got {n}")
    raw_letters = LetterScanner(text, HEADS[alphabet]).letters()
    logger.debug(f"Parsed {len(raw_letters)} {alphabet} letters from '{text}'")
    if alphabet == ELEMENTARY:
        return GroupWord(ring, n, tuple(_elementary_letter(ring, n, raw, text) for raw in raw_letters))
    if alphabet == STEINBERG:
        word = StWord(ring, n)
        for raw in raw_letters:
            word = word * _steinberg_letter(ring, n, raw, text)
        return word
    presentation = presentation_for(n)
    word = SymbolWord(ring, presentation)
    for raw in raw_letters:
        word = word * _symbol_letter(ring, presentation, raw, text)
    return word
