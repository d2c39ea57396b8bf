"""
Exact scalar arithmetic for the division rings D.

Two families are provided:

* ``FiniteField`` -- GF(p^k) as F_p[g]/(m(g)) where m is the monic irreducible
  polynomial of degree k whose lower coefficients have the smallest base-p
  encoding; tau is the Frobenius power a -> a^(p^j).
* ``QuaternionAlgebra`` -- the rational quaternion algebra (a,b) with basis
  1, i, j, k (i^2 = a, j^2 = b, ij = -ji = k); tau is conjugation by a fixed
  unit q0.

Elements are immutable dataclasses carrying a reference to their ring, so
they can be shared freely between threads.
"""

from __future__ import annotations

import itertools
import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Union

from sympy import Poly, symbols

from .exceptions import ConfigurationError, DomainError
from .specs import DivisionRingSpec

logger = logging.getLogger(__name__)

_X = symbols('x')


class DivisionRing(ABC):
    """Interface every scalar ring implements."""

    spec: DivisionRingSpec

    @property
    @abstractmethod
    def zero(self) -> 'Scalar':
        ...

    @property
    @abstractmethod
    def one(self) -> 'Scalar':
        ...

    @property
    @abstractmethod
    def is_commutative(self) -> bool:
        ...

    @property
    @abstractmethod
    def tau_is_identity(self) -> bool:
        ...

    @abstractmethod
    def from_int(self, value: int) -> 'Scalar':
        ...

    @abstractmethod
    def tau_pow(self, a: 'Scalar', j: int) -> 'Scalar':
        ...

    @abstractmethod
    def random_element(self, rng: random.Random, nonzero: bool = False) -> 'Scalar':
        ...

    def check_same(self, other: 'DivisionRing') -> None:
        if self.spec != other.spec:
            raise ConfigurationError(
                f"Mismatched ring specifications: {self.spec.label} vs {other.spec.label}"
            )


# ---------------------------------------------------------------------------
# Finite fields
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def conway_style_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lower coefficients (c_0..c_{k-1}) of the chosen monic irreducible of degree k."""
    if k == 1:
        return (0,)
    for lower in itertools.product(range(p), repeat=k):
        # itertools.product varies the last slot fastest; encode c_0 as the low digit
        coeffs = tuple(reversed(lower))
        dense = [1] + list(reversed(coeffs))
        if Poly(dense, _X, modulus=p).is_irreducible:
            return coeffs
    raise ConfigurationError(f"No irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True, eq=False)
class FiniteField(DivisionRing):
    """GF(p^k) with tau = Frobenius^j."""

    spec: DivisionRingSpec

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def order(self) -> int:
        return self.p ** self.k

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        return conway_style_modulus(self.p, self.k)

    @cached_property
    def zero(self) -> 'GFElement':
        return GFElement(self, (0,) * self.k)

    @cached_property
    def one(self) -> 'GFElement':
        return self.from_int(1)

    @cached_property
    def generator(self) -> 'GFElement':
        if self.k == 1:
            raise DomainError("The prime field has no generator symbol g")
        return GFElement(self, (0, 1) + (0,) * (self.k - 2))

    @property
    def is_commutative(self) -> bool:
        return True

    @property
    def tau_is_identity(self) -> bool:
        return self.spec.tau_exponent % self.k == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def from_int(self, value: int) -> 'GFElement':
        return GFElement(self, (value % self.p,) + (0,) * (self.k - 1))

    def from_coefficients(self, coeffs: list[int] | tuple[int, ...]) -> 'GFElement':
        """Element sum c_i g^i; coefficient lists longer than k are reduced."""
        return GFElement(self, self._reduce(list(coeffs)))

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        p, k = self.p, self.k
        coeffs = [c % p for c in coeffs]
        # g^k = -(c_0 + c_1 g + ... + c_{k-1} g^{k-1})
        for top in range(len(coeffs) - 1, k - 1, -1):
            lead = coeffs[top]
            if lead:
                coeffs[top] = 0
                for i, c in enumerate(self.modulus):
                    coeffs[top - k + i] = (coeffs[top - k + i] - lead * c) % p
        coeffs = coeffs[:k] + [0] * (k - len(coeffs))
        return tuple(coeffs)

    def add(self, x: 'GFElement', y: 'GFElement') -> 'GFElement':
        return GFElement(self, tuple((a + b) % self.p for a, b in zip(x.coeffs, y.coeffs)))

    def negate(self, x: 'GFElement') -> 'GFElement':
        return GFElement(self, tuple((-a) % self.p for a in x.coeffs))

    def multiply(self, x: 'GFElement', y: 'GFElement') -> 'GFElement':
        product = [0] * (2 * self.k - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    product[i + j] += a * b
        return GFElement(self, self._reduce(product))

    def power(self, x: 'GFElement', exponent: int) -> 'GFElement':
        if exponent < 0:
            return self.power(self.inverse(x), -exponent)
        acc, base = self.one, x
        while exponent:
            if exponent & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            exponent >>= 1
        return acc

    def inverse(self, x: 'GFElement') -> 'GFElement':
        if x.is_zero():
            raise DomainError("Zero has no inverse")
        return self.power(x, self.order - 2)

    def tau_pow(self, a: 'GFElement', j: int) -> 'GFElement':
        shift = (j * self.spec.tau_exponent) % self.k
        if shift == 0:
            return a
        return self.power(a, self.p ** shift)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> 'GFElement':
        while True:
            element = GFElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))
            if not (nonzero and element.is_zero()):
                return element

    def elements(self) -> Iterator['GFElement']:
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield GFElement(self, tuple(reversed(coeffs)))


@dataclass(frozen=True)
class GFElement:
    """An element sum c_i g^i of GF(p^k)."""

    ring: FiniteField = field(repr=False)
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self == self.ring.one

    def __add__(self, other: 'GFElement') -> 'GFElement':
        return self.ring.add(self, other)

    def __sub__(self, other: 'GFElement') -> 'GFElement':
        return self.ring.add(self, self.ring.negate(other))

    def __neg__(self) -> 'GFElement':
        return self.ring.negate(self)

    def __mul__(self, other: 'GFElement') -> 'GFElement':
        return self.ring.multiply(self, other)

    def __pow__(self, exponent: int) -> 'GFElement':
        return self.ring.power(self, exponent)

    def inverse(self) -> 'GFElement':
        return self.ring.inverse(self)

    def __str__(self) -> str:
        if self.ring.k == 1:
            return str(self.coeffs[0])
        terms = []
        for power in range(self.ring.k - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            monomial = 'g' if power == 1 else f'g^{power}'
            terms.append(monomial if c == 1 else f'{c}*{monomial}')
        return '+'.join(terms) if terms else '0'


# ---------------------------------------------------------------------------
# Rational quaternions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuaternionAlgebra(DivisionRing):
    """The quaternion algebra (a,b) over Q with tau(x) = q0 x q0^-1."""

    spec: DivisionRingSpec
    q0: 'Quaternion | None' = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuaternionAlgebra) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    @property
    def a(self) -> Fraction:
        return Fraction(self.spec.a)

    @property
    def b(self) -> Fraction:
        return Fraction(self.spec.b)

    @cached_property
    def zero(self) -> 'Quaternion':
        return Quaternion(self, (Fraction(0),) * 4)

    @cached_property
    def one(self) -> 'Quaternion':
        return self.from_int(1)

    @property
    def is_commutative(self) -> bool:
        return False

    @property
    def tau_is_identity(self) -> bool:
        return self.conjugator.is_central()

    @property
    def conjugator(self) -> 'Quaternion':
        return self.q0 if self.q0 is not None else self.one

    @cached_property
    def conjugator_inverse(self) -> 'Quaternion':
        return self.conjugator.inverse()

    def from_int(self, value: int | Fraction) -> 'Quaternion':
        return Quaternion(self, (Fraction(value), Fraction(0), Fraction(0), Fraction(0)))

    def basis(self, index: int) -> 'Quaternion':
        parts = [Fraction(0)] * 4
        parts[index] = Fraction(1)
        return Quaternion(self, tuple(parts))

    def multiply(self, x: 'Quaternion', y: 'Quaternion') -> 'Quaternion':
        a, b = self.a, self.b
        x0, x1, x2, x3 = x.parts
        y0, y1, y2, y3 = y.parts
        return Quaternion(self, (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ))

    def norm(self, x: 'Quaternion') -> Fraction:
        a, b = self.a, self.b
        x0, x1, x2, x3 = x.parts
        return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3

    def inverse(self, x: 'Quaternion') -> 'Quaternion':
        n = self.norm(x)
        if n == 0:
            raise DomainError("Zero has no inverse")
        x0, x1, x2, x3 = x.parts
        return Quaternion(self, (x0 / n, -x1 / n, -x2 / n, -x3 / n))

    def tau_pow(self, x: 'Quaternion', j: int) -> 'Quaternion':
        if j == 0 or self.tau_is_identity:
            return x
        left, right = (self.conjugator, self.conjugator_inverse) if j > 0 else \
            (self.conjugator_inverse, self.conjugator)
        for _ in range(abs(j)):
            x = self.multiply(self.multiply(left, x), right)
        return x

    def random_element(self, rng: random.Random, nonzero: bool = False) -> 'Quaternion':
        while True:
            element = Quaternion(self, tuple(Fraction(rng.randint(-2, 2)) for _ in range(4)))
            if not (nonzero and element.is_zero()):
                return element


@dataclass(frozen=True)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k with rational coordinates."""

    ring: QuaternionAlgebra = field(repr=False)
    parts: tuple[Fraction, Fraction, Fraction, Fraction]

    def is_zero(self) -> bool:
        return not any(self.parts)

    def is_one(self) -> bool:
        return self.parts == (1, 0, 0, 0)

    def is_central(self) -> bool:
        return not any(self.parts[1:])

    def __add__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion(self.ring, tuple(x + y for x, y in zip(self.parts, other.parts)))

    def __sub__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion(self.ring, tuple(x - y for x, y in zip(self.parts, other.parts)))

    def __neg__(self) -> 'Quaternion':
        return Quaternion(self.ring, tuple(-x for x in self.parts))

    def __mul__(self, other: 'Quaternion') -> 'Quaternion':
        return self.ring.multiply(self, other)

    def __pow__(self, exponent: int) -> 'Quaternion':
        base = self if exponent >= 0 else self.inverse()
        acc = self.ring.one
        for _ in range(abs(exponent)):
            acc = acc * base
        return acc

    def inverse(self) -> 'Quaternion':
        return self.ring.inverse(self)

    def __str__(self) -> str:
        terms = []
        for value, name in zip(self.parts, ('', 'i', 'j', 'k')):
            if value == 0:
                continue
            if not name:
                terms.append(str(value))
            elif value == 1:
                terms.append(name)
            elif value == -1:
                terms.append(f'-{name}')
            else:
                terms.append(f'{value}*{name}')
        if not terms:
            return '0'
        return '+'.join(terms).replace('+-', '-')


Scalar = Union[GFElement, Quaternion]


@lru_cache(maxsize=None)
def build_ring(spec: DivisionRingSpec) -> DivisionRing:
    """Instantiate (once per spec) the division ring a spec describes."""
    if spec.kind == 'finite_field':
        field_ = FiniteField(spec)
        logger.debug(f"Built GF({field_.order}) with modulus {field_.modulus}")
        return field_
    algebra = QuaternionAlgebra(spec)
    # q0 is written in the algebra's own literal syntax
    from .literals import parse_scalar

    q0 = parse_scalar(algebra, spec.q0)
    if q0.is_zero():
        raise ConfigurationError("q0 must be a unit")
    return QuaternionAlgebra(spec, q0)
