"""
The groups H~ and N~ of the extension construction.

H~ is the torus normal form of the symbols app.  An element of N~ is stored
as h theta_sigma, where theta_a lifts w_{a,a+1}(-1) and theta_sigma is the
product of the theta_a along the reduced word of sigma; the braid relations
make this independent of the reduced word chosen.  Products are brought back
to that form by theta_a^2 = h~_{a,a+1}(-1) and by the action of theta_a on H~:

    n = 2:   theta h~(v) theta^-1 = h~(v^-1),     theta xi theta^-1 = h~(phi(xi)^-1) xi
    n >= 3:  the action table at u = -1 on h~_1k(v); xi moves only under theta_1,
             where it picks up h~_12(phi(xi)^-1) as in rank two.

Equality is decided as far as the certificates reach: the permutation, the
diagonal image of the torus part and, when D is commutative with tau = id, the
tame value of its symbol part.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from linear.generators import gen_w, gen_w_affine
from linear.matrices import MonomialMatrix, monomial_parts
from ring.exceptions import ConsistencyError, DomainError
from ring.laurent import LaurentPoly, commutator
from ring.scalars import DivisionRing, FiniteField, Scalar
from roots.affine import AffineRoot, is_simple
from roots.weyl import (Permutation, compose, identity, length, reduced_word, simple_transposition,
                        transposition)
from bruhat.factorization import torus_quotient
from symbols.certificates import QuotientCertificate, distinguishing, torus_certificates
from symbols.torus import TorusElement
from symbols.words import SymbolWord, presentation_for, symbol_image

logger = logging.getLogger(__name__)

HTildeElement = TorusElement

SIGMA = 'sigma'


def h_tilde(n: int, i: int, j: int, u: LaurentPoly) -> HTildeElement:
    return TorusElement.h(n, i, j, u)


def h_mul(a: HTildeElement, b: HTildeElement) -> HTildeElement:
    if a.n != b.n:
        raise DomainError(f"Cannot multiply elements of H~ for n={a.n} and n={b.n}")
    a.ring.check_same(b.ring)
    return a * b


def same_torus(a: HTildeElement, b: HTildeElement) -> bool:
    return distinguishing(torus_certificates(a), torus_certificates(b)) is None


# -- the action of N on H~ ---------------------------------------------------

def w_action(n: int, i: int, j: int, u: LaurentPoly, k: int, l: int, v: LaurentPoly) -> HTildeElement:
    """w_ij(u) . h~_kl(v)."""
    if n == 2:
        return _rank_two_action(i, j, u, k, l, v)
    minus = -LaurentPoly.one(u.ring)
    u_inv = u.inverse()

    def h(a, b, x):
        return TorusElement.h(n, a, b, x)

    if i not in (k, l) and j not in (k, l):
        return h(k, l, v)
    if i == k and j == l:
        return h(j, i, minus * u_inv * v * u_inv) * h(j, i, minus * u_inv * u_inv).inverse()
    if i == l and j == k:
        return h(i, j, minus * u * v * u) * h(i, j, minus * u * u).inverse()
    if i == k:
        return h(j, l, minus * u_inv * v) * h(j, l, minus * u_inv).inverse()
    if i == l:
        return h(k, j, minus * v * u) * h(k, j, minus * u).inverse()
    if j == k:
        return h(i, l, u * v) * h(i, l, u).inverse()
    return h(k, i, v * u_inv) * h(k, i, u_inv).inverse()


def printed_opposite_action(n: int, i: int, j: int, u: LaurentPoly, v: LaurentPoly) -> HTildeElement:
    """w_ij(u) . h~_ji(v) closed with h~_ji(-u^2)^-1 instead of h~_ij(-u^2)^-1."""
    minus = -LaurentPoly.one(u.ring)
    return TorusElement.h(n, i, j, minus * u * v * u) * TorusElement.h(n, j, i, minus * u * u).inverse()


def _rank_two_action(i: int, j: int, u: LaurentPoly, k: int, l: int, v: LaurentPoly) -> HTildeElement:
    # w_21(u) = w_12(-u^-1) and h~_21(v) = h~(v)^-1
    if (i, j) == (2, 1):
        u = -u.inverse()
    value = TorusElement.h(2, 1, 2, u * v.inverse() * u) * TorusElement.h(2, 1, 2, u * u).inverse()
    return value if (k, l) == (1, 2) else value.inverse()


def theta_act(a: int, h: HTildeElement) -> HTildeElement:
    """theta_a h theta_a^-1."""
    n, ring = h.n, h.ring
    xi = TorusElement.from_symbols(h.xi, n)
    if h.xi.symbols and (n == 2 or a == 1):
        xi = TorusElement.h(n, 1, 2, symbol_image(h.xi).inverse()) * xi
    result = xi
    minus = -LaurentPoly.one(ring)
    for k, v in enumerate(h.payloads, start=2):
        if not v.is_one():
            result = result * w_action(n, a, a + 1, minus, 1, k, v)
    return result


def act(sigma: Permutation, h: HTildeElement) -> HTildeElement:
    """theta_sigma h theta_sigma^-1."""
    for a in reversed(reduced_word(sigma)):
        h = theta_act(a, h)
    return h


def theta_image(ring: DivisionRing, sigma: Permutation) -> MonomialMatrix:
    n = len(sigma)
    minus = -LaurentPoly.one(ring)
    image = MonomialMatrix.identity(ring, n)
    for a in reduced_word(sigma):
        image = image * monomial_parts(gen_w(n, a, a + 1, minus))
    return image


# -- N~ -------------------------------------------------------------------------

@dataclass(frozen=True)
class NTildeElement:
    """h theta_sigma."""

    h: HTildeElement
    sigma: Permutation

    @property
    def ring(self) -> DivisionRing:
        return self.h.ring

    @property
    def n(self) -> int:
        return self.h.n

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'NTildeElement':
        return cls(TorusElement.identity(ring, n), identity(n))

    @classmethod
    def torus(cls, h: HTildeElement) -> 'NTildeElement':
        return cls(h, identity(h.n))

    @classmethod
    def theta(cls, ring: DivisionRing, n: int, a: int) -> 'NTildeElement':
        if not 1 <= a < n:
            raise DomainError(f"No simple reflection s_{a} for n={n}")
        return cls(TorusElement.identity(ring, n), simple_transposition(n, a))

    @classmethod
    def theta_inverse(cls, ring: DivisionRing, n: int, a: int) -> 'NTildeElement':
        # theta_a^-1 = theta_a h~_a(-1)^-1
        square = TorusElement.h(n, a, a + 1, -LaurentPoly.one(ring))
        return cls(theta_act(a, square.inverse()), simple_transposition(n, a))

    def _times_theta(self, a: int) -> 'NTildeElement':
        sigma = compose(self.sigma, simple_transposition(self.n, a))
        if length(sigma) > length(self.sigma):
            return NTildeElement(self.h, sigma)
        square = TorusElement.h(self.n, a, a + 1, -LaurentPoly.one(self.ring))
        return NTildeElement(self.h * act(sigma, square), sigma)

    def __mul__(self, other: 'NTildeElement') -> 'NTildeElement':
        if other.n != self.n:
            raise DomainError(f"Cannot multiply elements of N~ for n={self.n} and n={other.n}")
        result = NTildeElement(self.h * act(self.sigma, other.h), self.sigma)
        for a in reduced_word(other.sigma):
            result = result._times_theta(a)
        return result

    def inverse(self) -> 'NTildeElement':
        result = NTildeElement.identity(self.ring, self.n)
        for a in reversed(reduced_word(self.sigma)):
            result = result * NTildeElement.theta_inverse(self.ring, self.n, a)
        return result * NTildeElement.torus(self.h.inverse())

    def conjugate(self, h: HTildeElement) -> HTildeElement:
        """self h self^-1, an element of H~."""
        return self.h * act(self.sigma, h) * self.h.inverse()

    def psi(self) -> MonomialMatrix:
        return self.h.pi() * theta_image(self.ring, self.sigma)

    def certificates(self) -> list[QuotientCertificate]:
        return [QuotientCertificate(SIGMA, str(list(self.sigma)))] + torus_certificates(self.h)

    def is_torus(self) -> bool:
        return self.sigma == identity(self.n)

    def __str__(self) -> str:
        return f"{self.h} | theta{list(self.sigma)}"


def same_element(a: NTildeElement, b: NTildeElement) -> bool:
    return distinguishing(a.certificates(), b.certificates()) is None


# -- lifts ----------------------------------------------------------------------

def _symbol_with_image(ring: DivisionRing, n: int, s: LaurentPoly) -> SymbolWord:
    """A single symbol c(u, v) with [u, v] = s, searched among t^+-1 and the constants."""
    presentation = presentation_for(n)
    if s.is_one():
        return SymbolWord(ring, presentation)
    if isinstance(ring, FiniteField):
        t = LaurentPoly.t_power(ring, 1)
        for b in ring.elements():
            if b.is_zero():
                continue
            constant = LaurentPoly.constant(ring, b)
            for u in (t, t.inverse()):
                if commutator(u, constant) == s:
                    return SymbolWord.of(ring, u, constant, 1, presentation)
    raise DomainError(f"No symbol with commutator image {s} was found")


def torus_from_diagonal(d: MonomialMatrix) -> HTildeElement:
    """An element of H~ with the given diagonal image."""
    if not d.is_diagonal:
        raise DomainError(f"{d} is not diagonal")
    n, ring = d.n, d.ring
    payloads = tuple(unit.inverse() for unit in d.units[1:])
    prefix = LaurentPoly.one(ring)
    for v in payloads:
        prefix = prefix * v
    xi = _symbol_with_image(ring, n, d.units[0] * prefix.inverse())
    element = TorusElement(ring, n, xi, payloads)
    if element.pi() != d:
        raise ConsistencyError(f"Torus lift of {d} has image {element.pi()}")
    return element


def lift_monomial(m: MonomialMatrix) -> NTildeElement:
    """An element of N~ with psi-image m."""
    correction = m * theta_image(m.ring, m.sigma).inverse()
    return NTildeElement(torus_from_diagonal(correction), m.sigma)


def theta_lift(ring: DivisionRing, n: int, i: int, j: int) -> NTildeElement:
    """The lift of w_ij(-1): theta_a itself for simple roots, else corrected by signs."""
    if i > j:
        # w_ji(1) = w_ij(-1)
        return theta_lift(ring, n, j, i).inverse()
    if j == i + 1:
        return NTildeElement.theta(ring, n, i)
    minus = -LaurentPoly.one(ring)
    lifted = lift_monomial(monomial_parts(gen_w(n, i, j, minus)))
    if lifted.sigma != transposition(n, i, j):
        raise ConsistencyError(f"Lift of w[{i},{j}](-1) has permutation {lifted.sigma}")
    return lifted


def w_tilde(n: int, i: int, j: int, u: LaurentPoly) -> NTildeElement:
    """w~_ij(u) = h~_ij(u) theta_ij^-1, mapping to w_ij(u)."""
    theta = theta_lift(u.ring, n, i, j)
    return NTildeElement.torus(TorusElement.h(n, i, j, u)) * theta.inverse()


def _require_simple(root: AffineRoot, n: int) -> None:
    if not is_simple(root, n):
        raise DomainError(f"{root} is not a simple affine root for n={n}")


def affine_weyl_lift(ring: DivisionRing, n: int, root: AffineRoot) -> NTildeElement:
    """w~ for a simple affine root, with psi-image w_root(1)."""
    _require_simple(root, n)
    if root.level == 0:
        lifted = NTildeElement.theta_inverse(ring, n, root.i)
    else:
        minus_t_inv = -LaurentPoly.t_power(ring, -1)
        lifted = NTildeElement.torus(TorusElement.h(n, 1, n, minus_t_inv)) * theta_lift(ring, n, 1, n).inverse()
    expected = monomial_parts(gen_w_affine(n, root, ring.one))
    if lifted.psi() != expected:
        raise ConsistencyError(f"Lift of w_{root}(1) maps to {lifted.psi()}, expected {expected}")
    return lifted


def affine_torus_lift(ring: DivisionRing, n: int, root: AffineRoot, f: Scalar) -> HTildeElement:
    """h~_root(f), with image h_root(f) h_root(1)^-1."""
    _require_simple(root, n)
    if f.is_zero():
        raise DomainError(f"h~_{root} needs a nonzero coefficient")
    constant = LaurentPoly.constant(ring, f)
    if root.level == 0:
        lifted = TorusElement.h(n, root.i, root.j, constant)
    else:
        minus_t_inv = -LaurentPoly.t_power(ring, -1)
        lifted = (TorusElement.h(n, 1, n, constant.inverse() * minus_t_inv)
                  * TorusElement.h(n, 1, n, minus_t_inv).inverse())
    expected = torus_quotient(n, root, f, ring.one)
    if lifted.pi() != expected:
        raise ConsistencyError(f"h~_{root}({f}) maps to {lifted.pi()}, expected {expected}")
    return lifted


# -- conjugation ------------------------------------------------------------------

NAction = Union[NTildeElement, MonomialMatrix]


def n_act(w: NAction, h: HTildeElement) -> HTildeElement:
    """w . h for an element of N~, or for a monomial matrix through its lift."""
    if isinstance(w, MonomialMatrix):
        w = lift_monomial(w)
    if w.n != h.n:
        raise DomainError(f"Cannot act with rank {w.n} on rank {h.n}")
    return w.conjugate(h)


def w1(ring: DivisionRing) -> NTildeElement:
    """w_1 = theta, the lift of w_12(-1)."""
    return NTildeElement.theta(ring, 2, 1)


def conj_h_w1(h: HTildeElement) -> HTildeElement:
    """Y with h w_1 h^-1 = Y w_1, for n = 2."""
    if h.n != 2:
        raise DomainError(f"conj_h_w1 is defined for n=2, got n={h.n}")
    theta = w1(h.ring)
    conjugated = NTildeElement.torus(h) * theta * NTildeElement.torus(h.inverse())
    result = conjugated * theta.inverse()
    if not result.is_torus():
        raise ConsistencyError(f"h w_1 h^-1 w_1^-1 left the torus: {result}")
    logger.debug(f"conj_h_w1({h}) = {result.h}")
    return result.h
