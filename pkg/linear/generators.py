"""
Generator letters x, w, h over finite and affine roots, words in them, and
the subgroup membership tests for U and B.

A finite letter ``x[i,j](g)`` carries any g in D_tau; an affine letter
``xa[i,j,m](f)`` carries f in D and stands for x_beta(f t^m) when beta is
positive and x_beta(t^m f) when beta is negative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Union

from ring.exceptions import DomainError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing, Scalar
from roots.affine import AffineRoot, FiniteRoot

from .matrices import Matrix

Root = Union[FiniteRoot, AffineRoot]

FINITE_KINDS = ('x', 'w', 'h')
AFFINE_KINDS = ('xa', 'wa', 'ha')


def _check_indices(n: int, i: int, j: int) -> None:
    if i == j:
        raise DomainError(f"x[{i},{j}] needs distinct indices")
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"Indices ({i},{j}) out of range for n={n}")


def affine_payload(root: AffineRoot, f: Scalar) -> LaurentPoly:
    """The D_tau payload f t^m (beta positive) or t^m f (beta negative)."""
    ring = f.ring
    if root.root.is_positive:
        return LaurentPoly.monomial(ring, f, root.level)
    return LaurentPoly.right_monomial(ring, root.level, f)


def split_affine(i: int, j: int, q: LaurentPoly) -> tuple[AffineRoot, Scalar]:
    """Inverse of ``affine_payload``: the affine root and D-coefficient of a monomial."""
    if not q.is_unit():
        raise DomainError(f"{q} is not a single term")
    exponent, coeff = q.terms[0]
    root = AffineRoot.of(i, j, exponent)
    if root.root.is_positive:
        return root, coeff
    return root, q.ring.tau_pow(coeff, -exponent)


def gen_x(n: int, i: int, j: int, g: LaurentPoly) -> Matrix:
    """x_ij(g) = I + g E_ij."""
    _check_indices(n, i, j)
    return Matrix.from_entries(g.ring, n, {(i, j): g})


def gen_w(n: int, i: int, j: int, u: LaurentPoly) -> Matrix:
    """w_ij(u) = x_ij(u) x_ji(-u^-1) x_ij(u)."""
    if not u.is_unit():
        raise DomainError(f"w[{i},{j}] needs a unit payload, got {u}")
    return gen_x(n, i, j, u) * gen_x(n, j, i, -u.inverse()) * gen_x(n, i, j, u)


def gen_h(n: int, i: int, j: int, u: LaurentPoly) -> Matrix:
    """h_ij(u) = w_ij(u) w_ij(-1)."""
    return gen_w(n, i, j, u) * gen_w(n, i, j, -LaurentPoly.one(u.ring))


def gen_x_affine(n: int, root: AffineRoot, f: Scalar) -> Matrix:
    return gen_x(n, root.i, root.j, affine_payload(root, f))


def gen_w_affine(n: int, root: AffineRoot, s: Scalar) -> Matrix:
    """x_b(s) x_-b(-s^-1) x_b(s); this is w_beta of the affine payload."""
    if s.is_zero():
        raise DomainError(f"w_{root} needs a nonzero coefficient")
    return (gen_x_affine(n, root, s) * gen_x_affine(n, -root, -s.inverse())
            * gen_x_affine(n, root, s))


def gen_h_affine(n: int, root: AffineRoot, s: Scalar) -> Matrix:
    """h_b(s) = w_b(s) w_beta(-1)."""
    return gen_w_affine(n, root, s) * gen_w(n, root.i, root.j, -LaurentPoly.one(s.ring))


@dataclass(frozen=True)
class GeneratorLetter:
    """One generator, possibly inverted (only h letters keep ``power=-1``)."""

    kind: str
    root: Root
    payload: Union[LaurentPoly, Scalar]
    power: int = 1

    def __post_init__(self):
        if self.kind not in FINITE_KINDS + AFFINE_KINDS:
            raise DomainError(f"Unknown generator kind '{self.kind}'")
        if (self.kind in AFFINE_KINDS) != isinstance(self.root, AffineRoot):
            raise DomainError(f"Generator {self.kind} does not take root {self.root}")

    @property
    def i(self) -> int:
        return self.root.i

    @property
    def j(self) -> int:
        return self.root.j

    @property
    def is_affine(self) -> bool:
        return self.kind in AFFINE_KINDS

    @property
    def ring(self) -> DivisionRing:
        return self.payload.ring

    def poly(self) -> LaurentPoly:
        """The payload as an element of D_tau."""
        if self.is_affine:
            return affine_payload(self.root, self.payload)
        return self.payload

    def matrix(self, n: int) -> Matrix:
        if self.power == -1:
            # h(u)^-1 = h(u^-1) as matrices
            return gen_h(n, self.i, self.j, self.poly().inverse())
        base = self.kind[0]
        if self.is_affine:
            build = {'x': gen_x_affine, 'w': gen_w_affine, 'h': gen_h_affine}[base]
            return build(n, self.root, self.payload)
        build = {'x': gen_x, 'w': gen_w, 'h': gen_h}[base]
        return build(n, self.i, self.j, self.payload)

    def inverse(self) -> 'GeneratorLetter':
        if self.kind[0] in ('x', 'w'):
            return GeneratorLetter(self.kind, self.root, -self.payload)
        return GeneratorLetter(self.kind, self.root, self.payload, -self.power)

    def __str__(self) -> str:
        if self.is_affine:
            head = f'{self.kind}[{self.i},{self.j},{self.root.level}]'
        else:
            head = f'{self.kind}[{self.i},{self.j}]'
        suffix = '^-1' if self.power == -1 else ''
        return f'{head}({self.payload}){suffix}'


def x_letter(i: int, j: int, g: LaurentPoly) -> GeneratorLetter:
    return GeneratorLetter('x', FiniteRoot(i, j), g)


def w_letter(i: int, j: int, u: LaurentPoly) -> GeneratorLetter:
    return GeneratorLetter('w', FiniteRoot(i, j), u)


def h_letter(i: int, j: int, u: LaurentPoly) -> GeneratorLetter:
    return GeneratorLetter('h', FiniteRoot(i, j), u)


@dataclass(frozen=True)
class GroupWord:
    """A product of generator letters in GL(n, D_tau)."""

    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    n: int = 2
    letters: tuple[GeneratorLetter, ...] = ()

    def matrix(self) -> Matrix:
        product = Matrix.identity(self.ring, self.n)
        for letter in self.letters:
            product = product * letter.matrix(self.n)
        return product

    def inverse(self) -> 'GroupWord':
        return GroupWord(self.ring, self.n, tuple(letter.inverse() for letter in reversed(self.letters)))

    def __mul__(self, other: 'GroupWord') -> 'GroupWord':
        return GroupWord(self.ring, self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return '1'
        return '*'.join(str(letter) for letter in self.letters)


def in_U(m: Matrix) -> bool:
    """Nonnegative t-exponents and upper unitriangular modulo t."""
    return _integral(m) and _triangular_mod_t(m, unitriangular=True)


def in_B(m: Matrix) -> bool:
    """Nonnegative t-exponents and upper triangular modulo t with diagonal in D^x."""
    return _integral(m) and _triangular_mod_t(m, unitriangular=False)


def _integral(m: Matrix) -> bool:
    return all(entry.is_zero() or entry.min_exponent >= 0 for row in m.rows for entry in row)


def _triangular_mod_t(m: Matrix, unitriangular: bool) -> bool:
    for r in range(m.n):
        for c in range(m.n):
            constant = m.rows[r][c].coefficient(0)
            if r > c and not constant.is_zero():
                return False
            if r == c and (constant.is_zero() or (unitriangular and not constant.is_one())):
                return False
    return True


def positive_affine_roots(n: int, level_cap: int) -> list[AffineRoot]:
    roots = []
    for m in range(level_cap + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and (i < j or m > 0):
                    roots.append(AffineRoot.of(i, j, m))
    return roots


def random_u_word(ring: DivisionRing, n: int, rng: random.Random, length: int,
                  level_cap: int = 2) -> GroupWord:
    """A random product of x_b(f) with b positive."""
    roots = positive_affine_roots(n, level_cap)
    letters = tuple(GeneratorLetter('xa', rng.choice(roots), ring.random_element(rng))
                    for _ in range(length))
    return GroupWord(ring, n, letters)


def random_word(ring: DivisionRing, n: int, rng: random.Random, length: int,
                level_cap: int = 2) -> GroupWord:
    """A random word in affine x, w and h letters with |m| <= level_cap."""
    letters = []
    for _ in range(length):
        i, j = rng.sample(range(1, n + 1), 2)
        root = AffineRoot.of(i, j, rng.randint(-level_cap, level_cap))
        kind = rng.choice(AFFINE_KINDS)
        letters.append(GeneratorLetter(kind, root, ring.random_element(rng, nonzero=kind != 'xa')))
    return GroupWord(ring, n, tuple(letters))
