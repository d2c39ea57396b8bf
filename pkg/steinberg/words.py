"""
Words in the Steinberg group St(n, D_tau) and the projection phi onto E(n, D_tau).

Letters are x^_ij(f) with f in D_tau; x^_ij(f)^-1 is stored as x^_ij(-f).
Words are never rewritten except by free cancellation of adjacent
x^_ij(f) x^_ij(-f) pairs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from linear.generators import affine_payload, gen_x
from linear.matrices import Matrix
from ring.exceptions import DomainError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing, Scalar
from roots.affine import AffineRoot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StLetter:
    i: int
    j: int
    payload: LaurentPoly

    def inverse(self) -> 'StLetter':
        return StLetter(self.i, self.j, -self.payload)

    def cancels(self, other: 'StLetter') -> bool:
        return (self.i, self.j) == (other.i, other.j) and (self.payload + other.payload).is_zero()

    def __str__(self) -> str:
        return f'X[{self.i},{self.j}]({self.payload})'


@dataclass(frozen=True)
class StWord:
    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    n: int = 2
    letters: tuple[StLetter, ...] = ()

    def __mul__(self, other: 'StWord') -> 'StWord':
        if other.n != self.n:
            raise DomainError(f"Cannot multiply Steinberg words of rank {self.n} and {other.n}")
        return StWord(self.ring, self.n, self.letters + other.letters)

    def inverse(self) -> 'StWord':
        return StWord(self.ring, self.n, tuple(letter.inverse() for letter in reversed(self.letters)))

    def reduced(self) -> 'StWord':
        stack: list[StLetter] = []
        for letter in self.letters:
            if stack and stack[-1].cancels(letter):
                stack.pop()
            else:
                stack.append(letter)
        if len(stack) != len(self.letters):
            logger.debug(f"Free reduction removed {len(self.letters) - len(stack)} letters")
        return StWord(self.ring, self.n, tuple(stack))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return '1'
        return '*'.join(str(letter) for letter in self.letters)


def st_phi(word: StWord) -> Matrix:
    """phi(x^_ij(f)) = x_ij(f), extended multiplicatively."""
    product = Matrix.identity(word.ring, word.n)
    for letter in word.letters:
        product = product * gen_x(word.n, letter.i, letter.j, letter.payload)
    return product


def hat_x(n: int, i: int, j: int, f: LaurentPoly) -> StWord:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"X[{i},{j}] is not a root element for n={n}")
    return StWord(f.ring, n, (StLetter(i, j, f),))


def hat_x_affine(n: int, root: AffineRoot, f: Scalar) -> StWord:
    return hat_x(n, root.i, root.j, affine_payload(root, f))


def _require_unit(u: LaurentPoly, name: str) -> None:
    if not u.is_unit():
        raise DomainError(f"{name} needs a unit of D_tau, got {u}")


def hat_w(n: int, i: int, j: int, u: LaurentPoly) -> StWord:
    """w^_ij(u) = x^_ij(u) x^_ji(-u^-1) x^_ij(u)."""
    _require_unit(u, f'hw[{i},{j}]')
    return hat_x(n, i, j, u) * hat_x(n, j, i, -u.inverse()) * hat_x(n, i, j, u)


def hat_h(n: int, i: int, j: int, u: LaurentPoly) -> StWord:
    """h^_ij(u) = w^_ij(u) w^_ij(-1)."""
    return hat_w(n, i, j, u) * hat_w(n, i, j, -LaurentPoly.one(u.ring))


def hat_c(n: int, u: LaurentPoly, v: LaurentPoly, i: int = 1, j: int = 2) -> StWord:
    """c^_ij(u, v) = h^_ij(u) h^_ij(v) h^_ij(vu)^-1."""
    _require_unit(u, 'hc')
    _require_unit(v, 'hc')
    return hat_h(n, i, j, u) * hat_h(n, i, j, v) * hat_h(n, i, j, v * u).inverse()


def commutator_word(a: StWord, b: StWord) -> StWord:
    return a * b * a.inverse() * b.inverse()
