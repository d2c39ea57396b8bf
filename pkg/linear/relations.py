"""
Randomized audits of the elementary relations (R1)-(R6) in E(n, D_tau).

Every instance is checked by multiplying both sides out as matrices.  The
diagonal branches of (R4) are audited in their verified form
h_b(u) x_b(f) h_b(u)^-1 = x_b(u f u); the candidate with a leading minus
sign is kept as an informational row so its disagreement stays visible
without failing the audit.
"""

import logging
import random
from typing import Callable, Iterator, Optional

from ring.auditing import AuditReport, Outcome, run_family
from ring.exceptions import ConfigurationError
from ring.laurent import LaurentPoly, random_poly, random_unit
from ring.scalars import DivisionRing
from roots.affine import AffineRoot, FiniteRoot
from roots.patterns import (COMMUTATOR_BRANCHES, CONJUGATION_BRANCHES, OPPOSITE, ORTHOGONAL,
                            SAME, applicable, sample_pair)

from .generators import gen_h, gen_w, gen_x, gen_x_affine
from .matrices import Matrix

logger = logging.getLogger(__name__)

RELATION_FAMILIES = ('R1', 'R2', 'R3', 'R4', 'R5', 'R6')


def matrix_outcome(branch: str, lhs: Matrix, rhs: Matrix, informational: bool = False,
                   **instance) -> Outcome:
    if lhs == rhs:
        return Outcome(branch, True, informational=informational)
    details = {key: str(value) for key, value in instance.items()}
    details.update(lhs=str(lhs), rhs=str(rhs))
    return Outcome(branch, False, details, informational=informational)


class RelationSampler:
    """Draws payloads and builds both sides of each relation branch."""

    def __init__(self, ring: DivisionRing, n: int, degree_cap: int):
        self.ring = ring
        self.n = n
        self.degree_cap = degree_cap

    def X(self, root: FiniteRoot, g: LaurentPoly) -> Matrix:
        return gen_x(self.n, root.i, root.j, g)

    def W(self, root: FiniteRoot, u: LaurentPoly) -> Matrix:
        return gen_w(self.n, root.i, root.j, u)

    def H(self, root: FiniteRoot, u: LaurentPoly) -> Matrix:
        return gen_h(self.n, root.i, root.j, u)

    def poly(self, rng: random.Random) -> LaurentPoly:
        return random_poly(self.ring, rng, self.degree_cap)

    def unit(self, rng: random.Random) -> LaurentPoly:
        return random_unit(self.ring, rng, self.degree_cap)

    # -- families -----------------------------------------------------------

    def r1(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        beta, _ = sample_pair(rng, self.n, SAME)
        f, g = self.poly(rng), self.poly(rng)
        yield matrix_outcome('finite', self.X(beta, f) * self.X(beta, g), self.X(beta, f + g),
                             beta=beta, f=f, g=g)
        root = AffineRoot(beta, rng.randint(-self.degree_cap, self.degree_cap))
        a, b = self.ring.random_element(rng), self.ring.random_element(rng)
        yield matrix_outcome('affine',
                             gen_x_affine(self.n, root, a) * gen_x_affine(self.n, root, b),
                             gen_x_affine(self.n, root, a + b), root=root, f=a, g=b)

    def r2(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        for branch in applicable(COMMUTATOR_BRANCHES, self.n):
            beta, gamma = sample_pair(rng, self.n, branch)
            f, g = self.poly(rng), self.poly(rng)
            lhs = self.X(beta, f) * self.X(gamma, g) * self.X(beta, -f) * self.X(gamma, -g)
            if branch == 'j=k':
                rhs = self.X(FiniteRoot(beta.i, gamma.j), f * g)
            elif branch == 'i=l':
                rhs = self.X(FiniteRoot(gamma.i, beta.j), -(g * f))
            else:
                rhs = Matrix.identity(self.ring, self.n)
            yield matrix_outcome(branch, lhs, rhs, beta=beta, gamma=gamma, f=f, g=g)

    def r3(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        for branch in applicable(CONJUGATION_BRANCHES, self.n):
            beta, gamma = sample_pair(rng, self.n, branch)
            f, u = self.poly(rng), self.unit(rng)
            ui = u.inverse()
            lhs = self.W(beta, u) * self.X(gamma, f) * self.W(beta, -u)
            target = beta.reflect(gamma)
            payload = {
                ORTHOGONAL: f,
                SAME: -(ui * f * ui),
                OPPOSITE: -(u * f * u),
                'i=k': -(ui * f),
                'i=l': -(f * u),
                'j=k': u * f,
                'j=l': f * ui,
            }[branch]
            yield matrix_outcome(branch, lhs, self.X(target, payload),
                                 beta=beta, gamma=gamma, f=f, u=u)

    def r4(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        for branch in applicable(CONJUGATION_BRANCHES, self.n):
            beta, gamma = sample_pair(rng, self.n, branch)
            f, u = self.poly(rng), self.unit(rng)
            ui = u.inverse()
            lhs = self.H(beta, u) * self.X(gamma, f) * self.H(beta, ui)
            payload = {
                ORTHOGONAL: f,
                SAME: u * f * u,
                OPPOSITE: ui * f * ui,
                'i=k': u * f,
                'i=l': f * ui,
                'j=k': ui * f,
                'j=l': f * u,
            }[branch]
            yield matrix_outcome(branch, lhs, self.X(gamma, payload),
                                 beta=beta, gamma=gamma, f=f, u=u)
            if branch in (SAME, OPPOSITE):
                yield matrix_outcome(f'{branch} (printed sign)', lhs, self.X(gamma, -payload),
                                     informational=True, beta=beta, gamma=gamma, f=f, u=u)

    def r5(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        for branch in applicable(CONJUGATION_BRANCHES, self.n):
            beta, gamma = sample_pair(rng, self.n, branch)
            s, u = self.unit(rng), self.unit(rng)
            ui = u.inverse()
            lhs = self.W(beta, u) * self.W(gamma, s) * self.W(beta, -u)
            payload = {
                ORTHOGONAL: s,
                SAME: -(ui * s * ui),
                OPPOSITE: -(u * s * u),
                'i=k': -(ui * s),
                'i=l': -(s * u),
                'j=k': u * s,
                'j=l': s * ui,
            }[branch]
            yield matrix_outcome(branch, lhs, self.W(beta.reflect(gamma), payload),
                                 beta=beta, gamma=gamma, s=s, u=u)

    def r6(self, rng: random.Random, index: int) -> Iterator[Outcome]:
        for branch in applicable(CONJUGATION_BRANCHES, self.n):
            beta, gamma = sample_pair(rng, self.n, branch)
            s, u = self.unit(rng), self.unit(rng)
            ui = u.inverse()
            lhs = self.W(beta, u) * self.H(gamma, s) * self.W(beta, -u)
            target = beta.reflect(gamma)
            first, second = {
                ORTHOGONAL: (s, None),
                SAME: (ui * s * ui, u * u),
                OPPOSITE: (u * s * u, ui * ui),
                'i=k': (ui * s, u),
                'i=l': (s * u, ui),
                'j=k': (u * s, ui),
                'j=l': (s * ui, u),
            }[branch]
            rhs = self.H(target, first)
            if second is not None:
                rhs = rhs * self.H(target, second)
            yield matrix_outcome(branch, lhs, rhs, beta=beta, gamma=gamma, s=s, u=u)

    def check_for(self, family: str) -> Callable[[random.Random, int], Iterator[Outcome]]:
        return getattr(self, family.lower())


def audit_R(family: str, ring: DivisionRing, n: int, samples: int, seed: int,
            degree_cap: int = 3, workers: int = 1,
            report: Optional[AuditReport] = None) -> AuditReport:
    """Audit one of the relation families R1..R6 on ``samples`` random instances."""
    if family not in RELATION_FAMILIES:
        raise ConfigurationError(f"Unknown relation family '{family}'")
    if n < 2:
        raise ConfigurationError(f"Relations need n >= 2, got {n}")
    sampler = RelationSampler(ring, n, degree_cap)
    report = run_family(family, sampler.check_for(family), samples, seed, workers, report)
    if family == 'R2' and n == 2:
        report.note("R2 has no instances for n=2")
    if family == 'R4':
        report.note("R4 gamma=+-beta verified as x(u f u) and x(u^-1 f u^-1); "
                    "the minus-sign candidates are informational rows")
    return report
