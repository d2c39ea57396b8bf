"""
Words in the torus generators h^_ij(u), kept factored so both the matrix
image and the torus normal form of the symbols app can certify them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ring.exceptions import ConsistencyError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing
from symbols.certificates import QuotientCertificate, torus_certificates
from symbols.torus import TorusElement
from symbols.words import SYMPLECTIC, SymbolWord

from .words import StWord, hat_h, st_phi

PHI = 'phi'


@dataclass(frozen=True)
class TorusFactor:
    i: int
    j: int
    u: LaurentPoly
    power: int = 1

    def inverse(self) -> 'TorusFactor':
        return TorusFactor(self.i, self.j, self.u, -self.power)

    def word(self, n: int) -> StWord:
        word = hat_h(n, self.i, self.j, self.u)
        return word if self.power == 1 else word.inverse()

    def element(self, n: int) -> TorusElement:
        element = TorusElement.h(n, self.i, self.j, self.u)
        return element if self.power == 1 else element.inverse()

    def __str__(self) -> str:
        suffix = '^-1' if self.power == -1 else ''
        return f'hh[{self.i},{self.j}]({self.u}){suffix}'


@dataclass(frozen=True)
class TorusWord:
    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    n: int = 2
    factors: tuple[TorusFactor, ...] = ()

    @classmethod
    def from_symbols(cls, word: SymbolWord, n: Optional[int] = None) -> 'TorusWord':
        """zeta: c(u, v)^p -> c^_12(u, v)^p, at rank 2 for P and rank 3 for Q unless given."""
        n = n or (2 if word.presentation == SYMPLECTIC else 3)
        result = cls(word.ring, n)
        for symbol in word.symbols:
            result = result * torus_c(word.ring, n, symbol.u, symbol.v, power=symbol.power)
        return result

    def __mul__(self, other: 'TorusWord') -> 'TorusWord':
        return TorusWord(self.ring, self.n, self.factors + other.factors)

    def inverse(self) -> 'TorusWord':
        return TorusWord(self.ring, self.n, tuple(f.inverse() for f in reversed(self.factors)))

    def to_word(self) -> StWord:
        word = StWord(self.ring, self.n)
        for factor in self.factors:
            word = word * factor.word(self.n)
        return word

    def normal_form(self) -> TorusElement:
        element = TorusElement.identity(self.ring, self.n)
        for factor in self.factors:
            element = element * factor.element(self.n)
        return element

    def certificates(self) -> list[QuotientCertificate]:
        image = st_phi(self.to_word())
        normal = self.normal_form()
        if normal.pi().to_matrix() != image:
            raise ConsistencyError(f"Torus normal form of {self} disagrees with its matrix",
                                   {'word': str(self), 'normal_form': str(normal)})
        return [QuotientCertificate(PHI, str(image))] + torus_certificates(normal)

    def __str__(self) -> str:
        if not self.factors:
            return '1'
        return '*'.join(str(factor) for factor in self.factors)


def torus_h(ring: DivisionRing, n: int, i: int, j: int, u: LaurentPoly, power: int = 1) -> TorusWord:
    return TorusWord(ring, n, (TorusFactor(i, j, u, power),))


def torus_c(ring: DivisionRing, n: int, u: LaurentPoly, v: LaurentPoly, i: int = 1, j: int = 2,
            power: int = 1) -> TorusWord:
    """c^_ij(u, v) as the torus word h^_ij(u) h^_ij(v) h^_ij(vu)^-1."""
    word = TorusWord(ring, n, (TorusFactor(i, j, u), TorusFactor(i, j, v), TorusFactor(i, j, v * u, -1)))
    return word if power == 1 else word.inverse()


def word_certificates(word: StWord) -> list[QuotientCertificate]:
    return [QuotientCertificate(PHI, str(st_phi(word)))]
