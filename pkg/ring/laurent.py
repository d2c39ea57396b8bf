"""
The twisted Laurent polynomial ring D_tau = D[t, t^-1] with t a = tau(a) t.

Polynomials are stored in left-normal form sum c_m t^m as a tuple of
(exponent, coefficient) pairs sorted by exponent with no zero coefficients,
so equality is structural.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .exceptions import DomainError
from .scalars import DivisionRing, Scalar


def tau_pow(a: Scalar, j: int) -> Scalar:
    """tau^j(a)."""
    return a.ring.tau_pow(a, j)


@dataclass(frozen=True)
class LaurentPoly:
    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    terms: tuple[tuple[int, Scalar], ...] = ()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(cls, ring: DivisionRing, terms: Iterable[tuple[int, Scalar]]) -> 'LaurentPoly':
        collected: dict[int, Scalar] = {}
        for exponent, coeff in terms:
            collected[exponent] = collected[exponent] + coeff if exponent in collected else coeff
        return cls(ring, tuple(sorted((m, c) for m, c in collected.items() if not c.is_zero())))

    @classmethod
    def zero(cls, ring: DivisionRing) -> 'LaurentPoly':
        return cls(ring, ())

    @classmethod
    def one(cls, ring: DivisionRing) -> 'LaurentPoly':
        return cls(ring, ((0, ring.one),))

    @classmethod
    def constant(cls, ring: DivisionRing, c: Scalar) -> 'LaurentPoly':
        return cls.monomial(ring, c, 0)

    @classmethod
    def monomial(cls, ring: DivisionRing, c: Scalar, exponent: int) -> 'LaurentPoly':
        """c t^m (coefficient on the left)."""
        return cls(ring, () if c.is_zero() else ((exponent, c),))

    @classmethod
    def right_monomial(cls, ring: DivisionRing, exponent: int, c: Scalar) -> 'LaurentPoly':
        """t^m c, stored as tau^m(c) t^m."""
        return cls.monomial(ring, ring.tau_pow(c, exponent), exponent)

    @classmethod
    def t_power(cls, ring: DivisionRing, exponent: int) -> 'LaurentPoly':
        return cls.monomial(ring, ring.one, exponent)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][0] == 0 and self.terms[0][1].is_one()

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def coefficient(self, exponent: int) -> Scalar:
        for m, c in self.terms:
            if m == exponent:
                return c
        return self.ring.zero

    @property
    def min_exponent(self) -> int:
        if not self.terms:
            raise DomainError("The zero polynomial has no exponents")
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        if not self.terms:
            raise DomainError("The zero polynomial has no exponents")
        return self.terms[-1][0]

    def monomials(self) -> list['LaurentPoly']:
        return [LaurentPoly(self.ring, (term,)) for term in self.terms]

    def as_unit(self) -> 'Unit':
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit of D_tau")
        exponent, coeff = self.terms[0]
        return Unit(coeff, exponent)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: 'LaurentPoly') -> None:
        if self.ring is not other.ring:
            self.ring.check_same(other.ring)

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        self._check(other)
        return LaurentPoly.from_terms(self.ring, self.terms + other.terms)

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def __mul__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return tl_mul(self, other)

    def inverse(self) -> 'LaurentPoly':
        return tl_unit_inverse(self.as_unit()).as_poly()

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        base = self if exponent >= 0 else self.inverse()
        acc = LaurentPoly.one(self.ring)
        for _ in range(abs(exponent)):
            acc = acc * base
        return acc

    def shift_coefficients(self, j: int) -> 'LaurentPoly':
        """t^j f t^-j: apply tau^j to every coefficient."""
        return LaurentPoly(self.ring, tuple((m, self.ring.tau_pow(c, j)) for m, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for m, c in self.terms:
            coeff = str(c)
            if '+' in coeff or '-' in coeff[1:]:
                coeff = f'({coeff})'
            if m == 0:
                pieces.append(coeff)
            elif coeff == '1':
                pieces.append(f't^{m}')
            else:
                pieces.append(f'{coeff}*t^{m}')
        return '+'.join(pieces).replace('+-', '-')


@dataclass(frozen=True)
class Unit:
    """The unit s t^k of D_tau."""

    s: Scalar
    k: int

    def __post_init__(self):
        if self.s.is_zero():
            raise DomainError("A unit needs a nonzero coefficient")

    @property
    def ring(self) -> DivisionRing:
        return self.s.ring

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.ring, self.s, self.k)

    def __mul__(self, other: 'Unit') -> 'Unit':
        return Unit(self.s * self.ring.tau_pow(other.s, self.k), self.k + other.k)

    def __neg__(self) -> 'Unit':
        return Unit(-self.s, self.k)

    def inverse(self) -> 'Unit':
        return tl_unit_inverse(self)

    def __str__(self) -> str:
        return str(self.as_poly())


def tl_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Product in left-normal form: (a t^m)(b t^n) = a tau^m(b) t^(m+n)."""
    if f.ring is not g.ring:
        f.ring.check_same(g.ring)
    ring = f.ring
    products = []
    for m, a in f.terms:
        for n, b in g.terms:
            products.append((m + n, a * ring.tau_pow(b, m)))
    return LaurentPoly.from_terms(ring, products)


def tl_unit_inverse(u: Unit) -> Unit:
    """(s t^k)^-1 = tau^-k(s^-1) t^-k."""
    if u.s.is_zero():
        raise DomainError("Zero coefficient has no inverse")
    return Unit(u.ring.tau_pow(u.s.inverse(), -u.k), -u.k)


def tl_degree(u: Unit | LaurentPoly) -> int:
    if isinstance(u, LaurentPoly):
        u = u.as_unit()
    return u.k


def commutator(u: LaurentPoly, v: LaurentPoly) -> LaurentPoly:
    """[u, v] = u v u^-1 v^-1 for units."""
    return u * v * u.inverse() * v.inverse()


def conjugate(x: LaurentPoly, u: LaurentPoly) -> LaurentPoly:
    """^x u = x u x^-1."""
    return x * u * x.inverse()


def random_unit(ring: DivisionRing, rng: random.Random, degree_cap: int) -> LaurentPoly:
    return LaurentPoly.monomial(ring, ring.random_element(rng, nonzero=True),
                                rng.randint(-degree_cap, degree_cap))


def random_constant_unit(ring: DivisionRing, rng: random.Random) -> LaurentPoly:
    return LaurentPoly.constant(ring, ring.random_element(rng, nonzero=True))


def random_poly(ring: DivisionRing, rng: random.Random, degree_cap: int,
                max_terms: int = 2, low: int | None = None) -> LaurentPoly:
    """A random polynomial with exponents in [low, degree_cap]."""
    low = -degree_cap if low is None else low
    terms = [(rng.randint(low, degree_cap), ring.random_element(rng))
             for _ in range(rng.randint(1, max_terms))]
    return LaurentPoly.from_terms(ring, terms)


def require_same_ring(*polys: LaurentPoly) -> DivisionRing:
    ring = polys[0].ring
    for poly in polys[1:]:
        if poly.ring is not ring:
            ring.check_same(poly.ring)
    return ring
