"""
Randomized audits of the defining relations of P and Q.

Both sides of every instance are symbol words.  They are compared under the
commutator image, the tame image when D is commutative with tau = id, and
through zeta: each c(u, v) is sent to the torus word c^_12(u, v) of the
Steinberg group, whose matrix image and torus normal form are compared in
turn.

The ``steinberg`` family checks the tame symbol itself: bimultiplicativity,
antisymmetry and tame(s, 1 - s) = 1.
"""

import logging
import random
from typing import Callable, Iterator, Optional

from ring.auditing import AuditReport, Outcome, run_family
from ring.exceptions import ConfigurationError
from ring.laurent import LaurentPoly, commutator, conjugate, random_constant_unit, random_unit
from ring.scalars import DivisionRing
from steinberg.torus import TorusWord

from .certificates import certificates_of, distinguishing
from .words import GENERAL, SYMPLECTIC, SymbolWord, tame_supported, tame_symbol

logger = logging.getLogger(__name__)

SYMPLECTIC_FAMILIES = ('P1', 'P2', 'P3', 'P4', 'P5', "P5'")
GENERAL_FAMILIES = ('Q1', 'Q2', 'Q3', 'Q4')
SYMBOL_FAMILIES = SYMPLECTIC_FAMILIES + GENERAL_FAMILIES + ('steinberg',)


def symbol_outcome(branch: str, lhs: SymbolWord, rhs: SymbolWord, **instance) -> Outcome:
    """Pass unless the symbol certificates, or those of the zeta images, tell the sides apart."""
    name = distinguishing(certificates_of(lhs), certificates_of(rhs))
    if name is None:
        zeta_name = distinguishing(TorusWord.from_symbols(lhs).certificates(),
                                   TorusWord.from_symbols(rhs).certificates())
        name = None if zeta_name is None else f'zeta/{zeta_name}'
    if name is None:
        return Outcome(branch, True)
    details = {key: str(value) for key, value in instance.items()}
    details.update(lhs=str(lhs), rhs=str(rhs), certificate=name)
    return Outcome(branch, False, details)


class SymbolSampler:
    """Draws units and builds both sides of each P or Q relation."""

    def __init__(self, ring: DivisionRing, degree_cap: int):
        self.ring = ring
        self.degree_cap = degree_cap
        self.one = LaurentPoly.one(ring)

    def unit(self, rng: random.Random) -> LaurentPoly:
        return random_unit(self.ring, rng, self.degree_cap)

    def units(self, rng: random.Random, count: int) -> list[LaurentPoly]:
        return [self.unit(rng) for _ in range(count)]

    def scalar_not_one(self, rng: random.Random) -> Optional[LaurentPoly]:
        s = random_constant_unit(self.ring, rng)
        return None if s.is_one() else s

    def P(self, u: LaurentPoly, v: LaurentPoly, power: int = 1) -> SymbolWord:
        return SymbolWord.of(self.ring, u, v, power, SYMPLECTIC)

    def Q(self, u: LaurentPoly, v: LaurentPoly, power: int = 1) -> SymbolWord:
        return SymbolWord.of(self.ring, u, v, power, GENERAL)

    def identity(self, presentation: str) -> SymbolWord:
        return SymbolWord(self.ring, presentation)

    # -- P ------------------------------------------------------------------

    def p1(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v, w = self.units(rng, 3)
        lhs = self.P(u, v) * self.P(v * u, w)
        yield symbol_outcome('P1', lhs, self.P(u, v * w) * self.P(v, w), u=u, v=v, w=w)

    def p2(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v = self.units(rng, 2)
        yield symbol_outcome('P2', self.P(u, v), self.P(u * v * u, u.inverse()), u=u, v=v)

    def p3(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        x, y, u, v = self.units(rng, 4)
        xy = commutator(x, y)
        lhs = self.P(x, y) * self.P(u, v) * self.P(x, y, -1)
        yield symbol_outcome('P3', lhs, self.P(xy * u, v) * self.P(v, xy), x=x, y=y, u=u, v=v)

    def p4(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        """Both quantifier readings: any unit u with 1 - u a unit, and s in D^x with s != 1."""
        v = self.unit(rng)
        u = self.unit(rng)
        if (self.one - u).is_unit():
            yield symbol_outcome('1-u unit', self.P(u, v), self.P(u, v * (self.one - u)), u=u, v=v)
        else:
            yield Outcome('1-u unit', True, skipped=True)
        s = self.scalar_not_one(rng)
        if s is None:
            yield Outcome('s in D', True, skipped=True)
            return
        yield symbol_outcome('s in D', self.P(s, v), self.P(s, v * (self.one - s)), s=s, v=v)

    def p5(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v = self.units(rng, 2)
        yield symbol_outcome('P5', self.P(u, v), self.P(u, -(v * u)), u=u, v=v)

    def p5_primed(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v = self.units(rng, 2)
        yield symbol_outcome("P5'", self.P(u, v), self.P(-(u * v), v), u=u, v=v)

    # -- Q ------------------------------------------------------------------

    def q1(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v, w = self.units(rng, 3)
        rhs = self.Q(conjugate(u, v), conjugate(u, w)) * self.Q(u, w)
        yield symbol_outcome('Q1', self.Q(u * v, w), rhs, u=u, v=v, w=w)

    def q2(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v, w = self.units(rng, 3)
        rhs = self.Q(u, v) * self.Q(conjugate(v, u), conjugate(v, w))
        yield symbol_outcome('Q2', self.Q(u, v * w), rhs, u=u, v=v, w=w)

    def q3(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        s = self.scalar_not_one(rng)
        if s is None:
            yield Outcome('Q3', True, skipped=True)
            return
        yield symbol_outcome('Q3', self.Q(s, self.one - s), self.identity(GENERAL), s=s)

    def q4(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, v, x, y = self.units(rng, 4)
        uv = commutator(u, v)
        rhs = self.Q(x, y).conjugated(uv) * self.Q(u, v)
        yield symbol_outcome('Q4', self.Q(u, v) * self.Q(x, y), rhs, u=u, v=v, x=x, y=y)
        # the two expansions of c(uv a, uv b) through Q1 and Q2
        a, b = x, y
        lhs = self.Q(u, v) * self.Q(a, b).conjugated(v * u)
        rhs = self.Q(a, b).conjugated(u * v) * self.Q(u, v)
        yield symbol_outcome('expansions', lhs, rhs, u=u, v=v, a=a, b=b)

    # -- tame symbol laws ---------------------------------------------------

    def steinberg(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        u, u2, v, v2 = self.units(rng, 4)
        yield Outcome('bimultiplicative/left',
                      tame_symbol(u * u2, v) == tame_symbol(u, v) * tame_symbol(u2, v),
                      {'u': str(u), 'u2': str(u2), 'v': str(v)})
        yield Outcome('bimultiplicative/right',
                      tame_symbol(u, v * v2) == tame_symbol(u, v) * tame_symbol(u, v2),
                      {'u': str(u), 'v': str(v), 'v2': str(v2)})
        yield Outcome('antisymmetric', (tame_symbol(u, v) * tame_symbol(v, u)).is_one(),
                      {'u': str(u), 'v': str(v)})
        s = self.scalar_not_one(rng)
        if s is not None:
            yield Outcome('s,1-s', tame_symbol(s, self.one - s).is_one(), {'s': str(s)})
        if index == 0:
            failures = [str(a) for a in self.ring.elements() if not a.is_zero() and not a.is_one()
                        and not tame_symbol(LaurentPoly.constant(self.ring, a),
                                            LaurentPoly.constant(self.ring, self.ring.one - a)).is_one()]
            yield Outcome('s,1-s exhaustive', not failures, {'failures': failures})

    def check_for(self, family: str) -> Callable[[random.Random, int], Iterator[Outcome]]:
        if family == "P5'":
            return self.p5_primed
        return getattr(self, family.lower())


def audit_symbols(family: str, ring: DivisionRing, samples: int, seed: int, degree_cap: int = 3,
                  workers: int = 1, report: Optional[AuditReport] = None) -> AuditReport:
    """Audit one P or Q relation family, or the tame symbol laws, on ``samples`` instances."""
    if family not in SYMBOL_FAMILIES:
        raise ConfigurationError(f"Unknown symbol family '{family}'")
    if family == 'steinberg' and not tame_supported(ring):
        raise ConfigurationError(
            f"The steinberg family needs a commutative D with tau = id; {ring.spec.label} is not")
    sampler = SymbolSampler(ring, degree_cap)
    report = run_family(family, sampler.check_for(family), samples, seed, workers, report)
    if family == 'P4':
        report.note("P4 is audited under both quantifier readings; in D_tau they select the same "
                    "units, the first reading skips draws where 1-u is not a unit")
    if not tame_supported(ring):
        report.note(f"tame certificate unavailable over {ring.spec.label}")
    return report
