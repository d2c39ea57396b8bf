"""
Formal words in the symbols c(u, v) of the groups P (n = 2) and Q (n >= 3).

No normal form is attempted in P or Q.  A word is compared with another only
through computable images: the commutator image sending c(u, v) to
[u, v] = u v u^-1 v^-1, and in the commutative untwisted case the tame symbol.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ring.exceptions import DomainError, UnsupportedQuotientError
from ring.laurent import LaurentPoly, commutator, conjugate
from ring.scalars import DivisionRing, Scalar

logger = logging.getLogger(__name__)

SYMPLECTIC = 'P'
GENERAL = 'Q'


def presentation_for(n: int) -> str:
    """P governs rank two, Q every rank from three on."""
    if n < 2:
        raise DomainError(f"Symbols need n >= 2, got {n}")
    return SYMPLECTIC if n == 2 else GENERAL


@dataclass(frozen=True)
class Symbol:
    """c(u, v)^power."""

    u: LaurentPoly
    v: LaurentPoly
    power: int = 1

    def __post_init__(self):
        if not (self.u.is_unit() and self.v.is_unit()):
            raise DomainError(f"c({self.u}, {self.v}) needs unit arguments")
        if self.power not in (1, -1):
            raise DomainError(f"Symbol powers are +-1, got {self.power}")

    def image(self) -> LaurentPoly:
        value = commutator(self.u, self.v)
        return value if self.power == 1 else value.inverse()

    def inverse(self) -> 'Symbol':
        return Symbol(self.u, self.v, -self.power)

    def conjugated(self, x: LaurentPoly) -> 'Symbol':
        return Symbol(conjugate(x, self.u), conjugate(x, self.v), self.power)

    def __str__(self) -> str:
        suffix = '^-1' if self.power == -1 else ''
        return f'c({self.u},{self.v}){suffix}'


@dataclass(frozen=True)
class SymbolWord:
    """A product of symbols, tagged with its presentation (P or Q)."""

    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    presentation: str = SYMPLECTIC
    symbols: tuple[Symbol, ...] = ()

    @classmethod
    def of(cls, ring: DivisionRing, u: LaurentPoly, v: LaurentPoly, power: int = 1,
           presentation: str = SYMPLECTIC) -> 'SymbolWord':
        return cls(ring, presentation, (Symbol(u, v, power),))

    def __mul__(self, other: 'SymbolWord') -> 'SymbolWord':
        if other.presentation != self.presentation:
            raise DomainError(f"Cannot multiply words of {self.presentation} and {other.presentation}")
        return SymbolWord(self.ring, self.presentation, self.symbols + other.symbols)

    def inverse(self) -> 'SymbolWord':
        return SymbolWord(self.ring, self.presentation,
                          tuple(symbol.inverse() for symbol in reversed(self.symbols)))

    def conjugated(self, x: LaurentPoly) -> 'SymbolWord':
        """^x applied letterwise: ^x c(u, v) = c(x u x^-1, x v x^-1)."""
        return SymbolWord(self.ring, self.presentation, tuple(s.conjugated(x) for s in self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        if not self.symbols:
            return '1'
        return '*'.join(str(symbol) for symbol in self.symbols)


def symbol_image(word: SymbolWord) -> LaurentPoly:
    """The product of [u_i, v_i]^p_i in D_tau^x."""
    value = LaurentPoly.one(word.ring)
    for symbol in word.symbols:
        value = value * symbol.image()
    return value


def is_kernel_witness(word: SymbolWord) -> bool:
    return symbol_image(word).is_one()


def tame_supported(ring: DivisionRing) -> bool:
    return ring.is_commutative and ring.tau_is_identity


def _require_tame(ring: DivisionRing) -> None:
    if not tame_supported(ring):
        raise UnsupportedQuotientError(
            f"The tame symbol needs a commutative D with tau = id; {ring.spec.label} is not")


def tame_symbol(u: LaurentPoly, v: LaurentPoly) -> Scalar:
    """(a t^m, b t^n) -> (-1)^(mn) a^n b^-m."""
    ring = u.ring
    _require_tame(ring)
    if not (u.is_unit() and v.is_unit()):
        raise DomainError(f"tame({u}, {v}) needs units")
    (m, a), (n, b) = u.terms[0], v.terms[0]
    value = (a ** n) * (b ** -m)
    return -value if (m * n) % 2 else value


def tame_value(word: SymbolWord) -> Scalar:
    _require_tame(word.ring)
    value = word.ring.one
    for symbol in word.symbols:
        value = value * tame_symbol(symbol.u, symbol.v) ** symbol.power
    return value

