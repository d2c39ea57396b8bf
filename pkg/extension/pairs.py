"""
Compatible pairs (e, w~) with rho(e) = psi(w~), and the permutations of the
set X they form.

Left actions, written g(e, w~):

    lambda(h):  (psi(h) e, h w~)
    mu(u):      (u e, w~)                                  u in U
    nu_a:       (w_a(1) e, w~_a w~)            regular branch of the left step
                (w_a(1) e, h~_a(f)^-1 w~)      folded branch, f the left coordinate

and their right duals (e, w~)g*, with e w_b(-1) and w~ w~_b^-1 or w~ h~_b(g).
Each result is checked for compatibility before it is returned.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from bruhat.factorization import (FOLDED, LEFT, RIGHT, Factorization, absorb_left, absorb_right,
                                  rho_step_detail, simple_alphabet)
from linear.generators import GroupWord, h_letter, in_U, random_u_word
from linear.matrices import Matrix, MonomialMatrix
from ring.exceptions import ConsistencyError, DomainError, IncompatiblePairError
from ring.laurent import LaurentPoly, random_unit
from ring.scalars import DivisionRing
from roots.affine import AffineRoot, simple_roots
from symbols.certificates import distinguishing
from symbols.torus import TorusElement
from symbols.words import SymbolWord, is_kernel_witness, presentation_for

from .groups import HTildeElement, NTildeElement, affine_torus_lift, affine_weyl_lift

logger = logging.getLogger(__name__)

MATRIX = 'matrix'

LAMBDA = 'lambda'
MU = 'mu'
NU = 'nu'
MOVE_KINDS = (LAMBDA, MU, NU)


@dataclass(frozen=True)
class XPair:
    e: Factorization
    wt: NTildeElement

    def __post_init__(self):
        if self.e.w != self.wt.psi():
            raise ConsistencyError("Pair is not compatible: rho(e) differs from psi(w~)",
                                   {'rho': str(self.e.w), 'psi': str(self.wt.psi()), 'wt': str(self.wt)})

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'XPair':
        return cls(Factorization.identity(ring, n), NTildeElement.identity(ring, n))

    @property
    def n(self) -> int:
        return self.e.n

    @property
    def ring(self) -> DivisionRing:
        return self.e.ring

    def to_dict(self) -> dict:
        return {'e': self.e.to_dict(), 'wt': str(self.wt)}

    def __str__(self) -> str:
        return f"({self.e.matrix()}, {self.wt})"


def pair_difference(left: XPair, right: XPair) -> Optional[str]:
    """The first certificate telling the pairs apart: the matrix of e, then those of w~."""
    if left.e.matrix() != right.e.matrix():
        return MATRIX
    return distinguishing(left.wt.certificates(), right.wt.certificates())


# -- lambda and lambda* ---------------------------------------------------------

def torus_word(h: HTildeElement) -> GroupWord:
    """h letters whose product is pi(h)."""
    letters = []
    for symbol in h.xi.symbols:
        u, v = symbol.u, symbol.v
        triple = [h_letter(1, 2, u), h_letter(1, 2, v), h_letter(1, 2, (v * u).inverse())]
        if symbol.power == -1:
            triple = [h_letter(1, 2, letter.payload.inverse()) for letter in reversed(triple)]
        letters.extend(triple)
    for k, v in enumerate(h.payloads, start=2):
        if not v.is_one():
            letters.append(h_letter(1, k, v))
    return GroupWord(h.ring, h.n, tuple(letters))


def _refactorized(h: HTildeElement, e: Factorization, side: str) -> Factorization:
    word = torus_word(h)
    if word.matrix() != h.pi().to_matrix():
        raise ConsistencyError(f"Torus word of {h} does not reproduce its image")
    atoms = simple_alphabet(word)
    if side == LEFT:
        for atom in reversed(atoms):
            e = absorb_left(atom, e)
    else:
        for atom in atoms:
            e = absorb_right(e, atom)
    return e


def torus_product(h: HTildeElement, e: Factorization, side: str) -> Factorization:
    """The factorization of psi(h) e (or e psi(h) on the right).

    psi(h) u psi(h)^-1 stays in U when psi(h) has degree zero; otherwise the
    product is absorbed letter by letter, which yields its true rho.
    """
    d = h.pi()
    if side == LEFT:
        conjugated = d.to_matrix() * e.u * d.inverse().to_matrix()
        if in_U(conjugated):
            return Factorization(conjugated, d * e.w, e.v)
    else:
        conjugated = d.inverse().to_matrix() * e.v * d.to_matrix()
        if in_U(conjugated):
            return Factorization(e.u, e.w * d, conjugated)
    logger.warning(f"psi({h}) moves the {side} unipotent factor out of U; refactorizing")
    return _refactorized(h, e, side)


def _require_compatible(fac: Factorization, expected: MonomialMatrix, h: HTildeElement, pair: XPair) -> None:
    # rho(psi(h) e) = psi(h) rho(e) fails for some e once psi(h) has nonzero degree
    if fac.w != expected:
        raise IncompatiblePairError(
            f"lambda({h}) leaves the compatible pairs: rho is {fac.w}, psi is {expected}",
            {'h': str(h), 'pair': str(pair), 'rho': str(fac.w), 'psi': str(expected)})


def lambda_action(h: HTildeElement, pair: XPair) -> XPair:
    """lambda(h)(e, w~) = (psi(h) e, h w~)."""
    fac = torus_product(h, pair.e, LEFT)
    _require_compatible(fac, h.pi() * pair.e.w, h, pair)
    return XPair(fac, NTildeElement.torus(h) * pair.wt)


def lambda_star(pair: XPair, h: HTildeElement) -> XPair:
    """(e, w~)lambda*(h) = (e psi(h), w~ h)."""
    fac = torus_product(h, pair.e, RIGHT)
    _require_compatible(fac, pair.e.w * h.pi(), h, pair)
    return XPair(fac, pair.wt * NTildeElement.torus(h))


# -- mu and mu* -------------------------------------------------------------------

def _require_unipotent(u: Matrix) -> None:
    if not in_U(u):
        raise DomainError(f"{u} is not in U")


def mu_action(u: Matrix, pair: XPair) -> XPair:
    _require_unipotent(u)
    e = pair.e
    return XPair(Factorization(u * e.u, e.w, e.v), pair.wt)


def mu_star(pair: XPair, u: Matrix) -> XPair:
    _require_unipotent(u)
    e = pair.e
    return XPair(Factorization(e.u, e.w, e.v * u), pair.wt)


# -- nu and nu* -------------------------------------------------------------------

def nu_action(pair: XPair, root: AffineRoot, side: str) -> XPair:
    """nu_a(pair) on the left, or (pair)nu*_a on the right."""
    step = rho_step_detail(pair.e, root, side)
    ring, n = pair.ring, pair.n
    if side == LEFT:
        if step.branch == FOLDED:
            factor = NTildeElement.torus(affine_torus_lift(ring, n, root, step.coordinate).inverse())
        else:
            factor = affine_weyl_lift(ring, n, root)
        wt = factor * pair.wt
    else:
        if step.branch == FOLDED:
            factor = NTildeElement.torus(affine_torus_lift(ring, n, root, step.coordinate))
        else:
            factor = affine_weyl_lift(ring, n, root).inverse()
        wt = pair.wt * factor
    logger.debug(f"nu {side} {root}: {step.branch} branch, coordinate {step.coordinate}")
    return XPair(step.factorization, wt)


def nu_power(pair: XPair, root: AffineRoot, side: str, times: int) -> XPair:
    for _ in range(times):
        pair = nu_action(pair, root, side)
    return pair


def fourth_power_discrepancy(pair: XPair, root: AffineRoot, side: str) -> HTildeElement:
    """l with nu_a^4 = lambda(l) on this pair (w~ l on the right)."""
    image = nu_power(pair, root, side, 4)
    if image.e.matrix() != pair.e.matrix():
        raise ConsistencyError(f"nu_{root}^4 moved e on the {side}")
    if side == LEFT:
        difference = image.wt * pair.wt.inverse()
    else:
        difference = pair.wt.inverse() * image.wt
    if not difference.is_torus():
        raise ConsistencyError(f"nu_{root}^4 discrepancy is not in H~: {difference}")
    return difference.h


def nu_inverse(pair: XPair, root: AffineRoot, side: str) -> XPair:
    """nu_a^-1 = lambda(l)^-1 nu_a^3, l the fourth-power discrepancy."""
    correction = fourth_power_discrepancy(pair, root, side).inverse()
    cubed = nu_power(pair, root, side, 3)
    if side == LEFT:
        return lambda_action(correction, cubed)
    return lambda_star(cubed, correction)


# -- moves ------------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """One generator of G (left) or G* (right)."""

    kind: str
    side: str
    torus: Optional[HTildeElement] = None
    unipotent: Optional[Matrix] = None
    root: Optional[AffineRoot] = None

    def apply(self, pair: XPair) -> XPair:
        if self.kind == LAMBDA:
            return lambda_action(self.torus, pair) if self.side == LEFT else lambda_star(pair, self.torus)
        if self.kind == MU:
            return mu_action(self.unipotent, pair) if self.side == LEFT else mu_star(pair, self.unipotent)
        if self.kind == NU:
            return nu_action(pair, self.root, self.side)
        raise DomainError(f"Unknown move '{self.kind}'")

    @property
    def name(self) -> str:
        return self.kind if self.side == LEFT else f'{self.kind}*'

    def __str__(self) -> str:
        if self.kind == LAMBDA:
            argument = str(self.torus)
        elif self.kind == MU:
            argument = str(self.unipotent)
        else:
            argument = str(self.root)
        return f'{self.name}({argument})'


class MoveSampler:
    """Random generators of G and G*, and random pairs reached from the identity."""

    def __init__(self, ring: DivisionRing, n: int, degree_cap: int):
        self.ring = ring
        self.n = n
        self.degree_cap = degree_cap

    def symbol(self, rng: random.Random) -> SymbolWord:
        u = self.unit(rng)
        v = self.unit(rng)
        return SymbolWord.of(self.ring, u, v, 1, presentation_for(self.n))

    def unit(self, rng: random.Random) -> LaurentPoly:
        return random_unit(self.ring, rng, self.degree_cap)

    def torus(self, rng: random.Random) -> HTildeElement:
        """A random element of H~: a symbol part and a few generators of any degree."""
        h = TorusElement.identity(self.ring, self.n)
        if rng.random() < 0.5:
            h = TorusElement.from_symbols(self.symbol(rng), self.n)
        for _ in range(rng.randint(1, 2)):
            i, j = rng.sample(range(1, self.n + 1), 2)
            h = h * TorusElement.h(self.n, i, j, self.unit(rng))
        return h

    def kernel_element(self, rng: random.Random) -> HTildeElement:
        word = self.symbol(rng)
        if not is_kernel_witness(word):
            symbol = word.symbols[0]
            word = word * SymbolWord.of(self.ring, symbol.v, symbol.u, 1, word.presentation)
        return TorusElement.from_symbols(word, self.n)

    def unipotent(self, rng: random.Random) -> Matrix:
        return random_u_word(self.ring, self.n, rng, rng.randint(1, 2), level_cap=1).matrix()

    def root(self, rng: random.Random) -> AffineRoot:
        return rng.choice(simple_roots(self.n))

    def move(self, rng: random.Random, side: str, kind: Optional[str] = None) -> Move:
        kind = kind or rng.choice(MOVE_KINDS)
        if kind == LAMBDA:
            return Move(kind, side, torus=self.torus(rng))
        if kind == MU:
            return Move(kind, side, unipotent=self.unipotent(rng))
        return Move(kind, side, root=self.root(rng))

    def pair(self, rng: random.Random, steps: int) -> XPair:
        """A pair reached by ``steps`` random moves; a lambda leaving X is not taken."""
        pair = XPair.identity(self.ring, self.n)
        for _ in range(steps):
            try:
                pair = self.move(rng, rng.choice((LEFT, RIGHT))).apply(pair)
            except IncompatiblePairError:
                continue
        return pair

    def scalar(self, rng: random.Random):
        return self.ring.random_element(rng, nonzero=True)