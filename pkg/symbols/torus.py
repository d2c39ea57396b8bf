"""
Normal forms of torus elements over the symbol groups.

For n = 2 every element is xi h(s) with xi a word in P; for n >= 3 it is
xi h_12(v_2) h_13(v_3) ... h_1n(v_n) with xi a word in Q.  Products are brought
back to normal form by the relations

    h(u) h(v) = c(u, v) h(vu)
    h_1m(v) h_1k(x) = c(v, x) h_1k(x) h_1m(v)        (n >= 3)
    h(s) l = c(s, phi(l)) l h(s)                     (n = 2)
    h_1k(x) l = ^x l h_1k(x)                          (n >= 3)

each of which appends the symbols it emits to xi.  The same rewriting serves
the torus of the Steinberg group (with c(u, v) read as the torus commutator
symbol) and the abstract group H~ of the extension construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from linear.matrices import MonomialMatrix
from ring.exceptions import DomainError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing

from .words import Symbol, SymbolWord, presentation_for, symbol_image

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusElement:
    """xi times the torus factors; ``payloads[k - 2]`` belongs to h_1k."""

    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    n: int = 2
    xi: SymbolWord = None
    payloads: tuple[LaurentPoly, ...] = ()

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'TorusElement':
        one = LaurentPoly.one(ring)
        return cls(ring, n, SymbolWord(ring, presentation_for(n)), (one,) * (n - 1))

    @classmethod
    def from_symbols(cls, word: SymbolWord, n: int) -> 'TorusElement':
        if word.presentation != presentation_for(n):
            raise DomainError(f"Symbols of {word.presentation} do not live in rank {n}")
        return cls(word.ring, n, word, cls.identity(word.ring, n).payloads)

    @classmethod
    def h(cls, n: int, i: int, j: int, u: LaurentPoly) -> 'TorusElement':
        """h_ij(u) in normal form."""
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise DomainError(f"h[{i},{j}] is not a torus generator for n={n}")
        if not u.is_unit():
            raise DomainError(f"h[{i},{j}] needs a unit, got {u}")
        ring = u.ring
        if i == 1:
            return cls.identity(ring, n)._append(j, u)
        if j == 1:
            return cls.identity(ring, n)._append_inverse(i, u)
        # h_ij(u) = h_1j(u) h_1i(u)^-1
        return cls.identity(ring, n)._append(j, u)._append_inverse(i, u)

    @property
    def presentation(self) -> str:
        return self.xi.presentation

    def _symbol(self, u: LaurentPoly, v: LaurentPoly, power: int = 1) -> SymbolWord:
        return SymbolWord(self.ring, self.presentation, (Symbol(u, v, power),))

    def _prefix_product(self, upto: int) -> LaurentPoly:
        """v_2 v_3 ... v_(upto-1), the payloads a symbol passes on its way to xi."""
        value = LaurentPoly.one(self.ring)
        for k in range(2, upto):
            value = value * self.payloads[k - 2]
        return value

    def _moved_left(self, word: SymbolWord) -> SymbolWord:
        """The symbols l' with (torus part) l = l' (torus part)."""
        if not word.symbols:
            return word
        if self.n == 2:
            image = symbol_image(word)
            if image.is_one():
                # kernel symbols are central
                return word
            return self._symbol(self.payloads[0], image) * word
        return word.conjugated(self._prefix_product(self.n + 1))

    def _append(self, k: int, x: LaurentPoly) -> 'TorusElement':
        """self * h_1k(x)."""
        if self.n == 2 and k != 2:
            raise DomainError(f"Rank two only has h_12, got h_1{k}")
        if x.is_one():
            return self
        emitted = self.xi
        for m in range(self.n, k, -1):
            v = self.payloads[m - 2]
            if not v.is_one():
                emitted = emitted * self._symbol(v, x).conjugated(self._prefix_product(m))
        current = self.payloads[k - 2]
        if not current.is_one():
            emitted = emitted * self._symbol(current, x).conjugated(self._prefix_product(k))
        payloads = list(self.payloads)
        payloads[k - 2] = x * current
        return TorusElement(self.ring, self.n, emitted, tuple(payloads))

    def _append_inverse(self, k: int, x: LaurentPoly) -> 'TorusElement':
        """self * h_1k(x)^-1 using h(x)^-1 = [h(x^-1) moves c(x, x^-1)^-1 left] h(x^-1)."""
        if x.is_one():
            return self
        x_inv = x.inverse()
        single = TorusElement.identity(self.ring, self.n)._append(k, x_inv)
        inverse_part = single._moved_left(self._symbol(x, x_inv, -1))
        correction = TorusElement(self.ring, self.n, inverse_part, single.payloads)
        return self * correction

    def __mul__(self, other: 'TorusElement') -> 'TorusElement':
        if other.n != self.n:
            raise DomainError(f"Cannot multiply torus elements of rank {self.n} and {other.n}")
        result = TorusElement(self.ring, self.n, self.xi * self._moved_left(other.xi), self.payloads)
        for k in range(2, self.n + 1):
            result = result._append(k, other.payloads[k - 2])
        return result

    def inverse(self) -> 'TorusElement':
        result = TorusElement.identity(self.ring, self.n)
        for k in range(self.n, 1, -1):
            result = result._append_inverse(k, self.payloads[k - 2])
        return result * TorusElement.from_symbols(self.xi.inverse(), self.n)

    def pi(self) -> MonomialMatrix:
        """The diagonal matrix this element maps to."""
        first = symbol_image(self.xi) * self._prefix_product(self.n + 1)
        return MonomialMatrix.diagonal([first] + [v.inverse() for v in self.payloads])

    def is_identity(self) -> bool:
        return all(v.is_one() for v in self.payloads) and symbol_image(self.xi).is_one()

    def __str__(self) -> str:
        if self.n == 2:
            torus = f'h({self.payloads[0]})'
        else:
            torus = '*'.join(f'h[1,{k}]({v})' for k, v in enumerate(self.payloads, start=2))
        return f'{self.xi} | {torus}'
