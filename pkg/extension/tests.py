"""
Test suite for H~, N~, compatible pairs and the extension audits.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from bruhat.factorization import FOLDED, LEFT, REGULAR, RIGHT, rho_step_detail
from linear.generators import gen_h, gen_w, gen_w_affine, gen_x, gen_x_affine
from linear.matrices import monomial_parts
from ring.exceptions import ConfigurationError, ConsistencyError, DomainError, IncompatiblePairError
from ring.laurent import LaurentPoly, random_unit
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec
from roots.affine import simple_roots
from symbols.torus import TorusElement

from .audits import EXTENSION_FAMILIES, audit_extension
from .groups import (NTildeElement, affine_weyl_lift, conj_h_w1, h_mul, lift_monomial, n_act, same_element,
                     same_torus, w_action, w_tilde)
from .pairs import (LAMBDA, MATRIX, Move, MoveSampler, XPair, fourth_power_discrepancy, lambda_action,
                    mu_action, mu_star, nu_action, nu_inverse, pair_difference, torus_product)

F4 = build_ring(load_ring_spec('F4'))
F5 = build_ring(load_ring_spec('F5'))
F9 = build_ring(load_ring_spec('F9'))


def poly(text, ring=F5):
    return parse_poly(ring, text)


def h(n, i, j, text, ring=F5):
    return TorusElement.h(n, i, j, poly(text, ring))


class HTildeTestCase(SimpleTestCase):
    """Test cases for products and the action table on H~."""

    def test_product_of_rank_two_generators(self):
        """Test h~(u) h~(v) = c(u, v) h~(vu)."""
        product = h_mul(h(2, 1, 2, 't'), h(2, 1, 2, '3'))
        self.assertEqual(str(product.xi), 'c(t^1,3)')
        self.assertEqual(product.payloads, (poly('3*t'),))

    def test_product_checks_rank(self):
        with self.assertRaises(DomainError):
            h_mul(h(2, 1, 2, 't'), h(3, 1, 2, 't'))

    def test_rank_two_reflection_inverts(self):
        """Test w_12(-1) . h~(v) = h~(v^-1)."""
        v = poly('2*t^2')
        value = w_action(2, 1, 2, -LaurentPoly.one(F5), 1, 2, v)
        self.assertTrue(same_torus(value, TorusElement.h(2, 1, 2, v.inverse())))

    def test_rank_three_shared_index(self):
        """Test w_12(u) . h~_31(v) = h~_32(-vu) h~_32(-u)^-1."""
        u, v = poly('t'), poly('2')
        expected = TorusElement.h(3, 3, 2, -v * u) * TorusElement.h(3, 3, 2, -u).inverse()
        self.assertTrue(same_torus(w_action(3, 1, 2, u, 3, 1, v), expected))

    def test_disjoint_indices_fix_generator(self):
        value = w_action(4, 1, 2, poly('t'), 3, 4, poly('3*t^-1'))
        self.assertTrue(same_torus(value, h(4, 3, 4, '3*t^-1')))

    def test_action_matches_matrix_conjugation(self):
        u, v = poly('g*t^1', F9), poly('t^-1', F9)
        n = 3
        for (i, j), (k, l) in (((1, 2), (1, 2)), ((1, 2), (2, 1)), ((2, 3), (1, 3)), ((1, 3), (3, 2))):
            expected = gen_w(n, i, j, u) * gen_h(n, k, l, v) * gen_w(n, i, j, -u)
            self.assertEqual(w_action(n, i, j, u, k, l, v).pi().to_matrix(), expected)


class NTildeTestCase(SimpleTestCase):
    """Test cases for the normal form h theta_sigma."""

    def test_psi_of_weyl_lift(self):
        u = poly('2*t^1')
        for n, i, j in ((2, 1, 2), (3, 1, 3), (3, 3, 2)):
            self.assertEqual(w_tilde(n, i, j, u).psi().to_matrix(), gen_w(n, i, j, u))

    def test_inverse(self):
        element = NTildeElement(h(3, 1, 2, 't') * h(3, 2, 3, '3'), (2, 3, 1))
        self.assertTrue(same_element(element * element.inverse(), NTildeElement.identity(F5, 3)))
        self.assertTrue(same_element(element.inverse() * element, NTildeElement.identity(F5, 3)))

    def test_theta_squares_to_torus(self):
        theta = NTildeElement.theta(F5, 2, 1)
        square = theta * theta
        self.assertTrue(square.is_torus())
        self.assertTrue(same_torus(square.h, h(2, 1, 2, '4')))

    def test_lift_monomial_has_requested_image(self):
        m = gen_w(3, 1, 3, poly('t'))
        self.assertEqual(lift_monomial(monomial_parts(m)).psi().to_matrix(), m)

    def test_affine_weyl_lifts(self):
        for n in (2, 3):
            for root in simple_roots(n):
                self.assertEqual(affine_weyl_lift(F5, n, root).psi().to_matrix(), gen_w_affine(n, root, F5.one))

    def test_n_act_through_monomial_matrix(self):
        m = monomial_parts(gen_w(2, 1, 2, -LaurentPoly.one(F5)))
        self.assertTrue(same_torus(n_act(m, h(2, 1, 2, 't')), h(2, 1, 2, 't^-1')))

    def test_conj_h_w1(self):
        """Test h w_1 h^-1 = h~(u^2) w_1 for h = h~(u)."""
        value = conj_h_w1(h(2, 1, 2, 't'))
        self.assertEqual(value.pi().to_matrix(), gen_h(2, 1, 2, poly('t^2')))
        self.assertTrue(conj_h_w1(TorusElement.identity(F5, 2)).pi().to_matrix().is_identity())

    def test_conj_h_w1_needs_rank_two(self):
        with self.assertRaises(DomainError):
            conj_h_w1(h(3, 1, 2, 't'))


class XPairTestCase(SimpleTestCase):
    """Test cases for compatible pairs and the actions of G and G*."""

    def setUp(self):
        self.identity = XPair.identity(F5, 2)
        self.alpha = simple_roots(2)[1]

    def test_incompatible_pair_rejected(self):
        with self.assertRaises(ConsistencyError):
            XPair(self.identity.e, NTildeElement.theta(F5, 2, 1))

    def test_nu_on_unipotent_is_regular(self):
        e = mu_action(gen_x(2, 1, 2, poly('2')), self.identity).e
        self.assertEqual(rho_step_detail(e, self.alpha, LEFT).branch, REGULAR)
        moved = nu_action(XPair(e, self.identity.wt), self.alpha, LEFT)
        self.assertEqual(moved.e.matrix(), gen_w_affine(2, self.alpha, F5.one) * e.matrix())
        self.assertEqual(moved.wt.sigma, (2, 1))

    def test_right_step_folds(self):
        """Test that e w_a(1) x_a(1) steps right on the folded branch."""
        one = F5.one
        pair = mu_star(nu_action(self.identity, self.alpha, LEFT), gen_x_affine(2, self.alpha, one))
        self.assertEqual(rho_step_detail(pair.e, self.alpha, RIGHT).branch, FOLDED)
        moved = nu_action(pair, self.alpha, RIGHT)
        self.assertEqual(moved.e.matrix(), pair.e.matrix() * gen_w_affine(2, self.alpha, -one))

    def test_lambda_with_degree_zero_torus(self):
        pair = lambda_action(h(2, 1, 2, '2'), self.identity)
        self.assertEqual(pair.e.matrix(), gen_h(2, 1, 2, poly('2')))
        self.assertEqual(pair_difference(pair, self.identity), MATRIX)

    def test_lambda_off_degree_zero_on_unipotent(self):
        """Test lambda(h~(t)) on e = x_21(t) lands on rho = diag(t, t^-1)."""
        pair = mu_action(gen_x(2, 2, 1, poly('t')), self.identity)
        moved = lambda_action(h(2, 1, 2, 't'), pair)
        self.assertEqual(moved.e.w.sigma, (1, 2))
        self.assertEqual(moved.e.w.units, (poly('t'), poly('t^-1')))
        self.assertEqual(moved.e.matrix(), gen_h(2, 1, 2, poly('t')) * pair.e.matrix())

    def test_lambda_off_degree_zero_changes_double_coset(self):
        """Test psi(h) e and psi(h) rho(e) in different double cosets for h = h~(3t^-2)."""
        alpha_0 = simple_roots(2)[0]
        start = mu_action(gen_x(2, 1, 2, poly('4')), nu_action(self.identity, self.alpha, LEFT))
        pair = nu_action(start, alpha_0, RIGHT)
        self.assertEqual(pair.e.w.sigma, (1, 2))

        torus = h(2, 1, 2, '3*t^-2')
        # psi(h) e = [[2t^-1, 3t^-3], [0, 3t]] and its corner entry is too deep for a diagonal cell
        self.assertEqual(torus_product(torus, pair.e, LEFT).w.sigma, (2, 1))
        with self.assertRaises(IncompatiblePairError):
            lambda_action(torus, pair)
        with self.assertRaises(IncompatiblePairError):
            Move(LAMBDA, LEFT, torus=torus).apply(pair)

    def test_lambda_inverse_restores_pair(self):
        pair = mu_action(gen_x(2, 2, 1, poly('t')), self.identity)
        torus = h(2, 1, 2, '2*t')
        back = lambda_action(torus.inverse(), lambda_action(torus, pair))
        self.assertIsNone(pair_difference(back, pair))

    def test_mu_needs_unipotent(self):
        with self.assertRaises(DomainError):
            mu_action(gen_x(2, 2, 1, poly('1')), self.identity)

    def test_nu_fourth_power_is_a_kernel_element(self):
        for root in simple_roots(2):
            for side in (LEFT, RIGHT):
                l = fourth_power_discrepancy(self.identity, root, side)
                self.assertTrue(l.pi().to_matrix().is_identity())

    def test_nu_inverse(self):
        rng = random.Random(7)
        pair = MoveSampler(F5, 3, 1).pair(rng, 3)
        for root in simple_roots(3):
            for side in (LEFT, RIGHT):
                restored = nu_action(nu_inverse(pair, root, side), root, side)
                self.assertIsNone(pair_difference(restored, pair))

    def test_sampler_moves(self):
        sampler = MoveSampler(F9, 2, 2)
        move = sampler.move(random.Random(3), LEFT, LAMBDA)
        self.assertEqual(str(move)[:7], 'lambda(')
        self.assertEqual(move.name, 'lambda')


class ExtensionAuditTestCase(SimpleTestCase):
    """Test cases for audit_extension."""

    def test_rank_two_families_pass(self):
        for family in EXTENSION_FAMILIES:
            report = audit_extension(family, F5, 2, samples=3, seed=1, degree_cap=1, walk_length=3)
            self.assertTrue(report.passed, msg=f"{family}: {report.to_dict()}")

    def test_rank_three_families_pass(self):
        for family in ('commute', 'central', 'torus_relations', 'action', 'htilde', 'torus_conjugation'):
            report = audit_extension(family, F9, 3, samples=2, seed=2, degree_cap=1, walk_length=2)
            self.assertTrue(report.passed, msg=f"{family}: {report.to_dict()}")

    def test_twisted_ring(self):
        for family in ('weyl_inverse', 'transitive', 'htilde'):
            report = audit_extension(family, F4, 2, samples=2, seed=3, degree_cap=1, walk_length=2)
            self.assertTrue(report.passed, msg=f"{family}: {report.to_dict()}")
        self.assertIn(f'tame certificate unavailable over {F4.spec.label}', report.notes)
        self.assertEqual(F4.spec.label, 'F4:1')

    def test_lambda_off_degree_zero_is_audited(self):
        report = audit_extension('commute', F5, 2, samples=5, seed=4, degree_cap=1, walk_length=2)
        rows = [row for row in report.sorted_rows() if row.branch.startswith('lambda off degree zero')]
        self.assertEqual({row.branch for row in rows},
                         {'lambda off degree zero/left', 'lambda off degree zero/right'})
        for row in rows:
            self.assertFalse(row.informational)
            self.assertEqual(row.samples + row.skipped, 5)
            self.assertEqual(row.failures, 0)

    def test_configuration_errors(self):
        with self.assertRaises(ConfigurationError):
            audit_extension('braid', F5, 2, samples=1, seed=0)
        with self.assertRaises(ConfigurationError):
            audit_extension('commute', F5, 1, samples=1, seed=0)

    def test_same_seed_same_report(self):
        first = audit_extension('central', F9, 2, samples=3, seed=9, workers=2)
        second = audit_extension('central', F9, 2, samples=3, seed=9)
        self.assertEqual(first.to_dict(), second.to_dict())


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.integers(2, 3))
def test_psi_is_a_homomorphism(seed, n):
    rng = random.Random(seed)
    elements = []
    for _ in range(2):
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        i, j = rng.sample(range(1, n + 1), 2)
        elements.append(NTildeElement(TorusElement.h(n, i, j, random_unit(F9, rng, 2)), tuple(sigma)))
    left, right = elements
    assert (left * right).psi() == left.psi() * right.psi()


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32))
def test_random_walks_stay_compatible(seed):
    rng = random.Random(seed)
    pair = MoveSampler(F5, 2, 1).pair(rng, 4)
    assert pair.e.w == pair.wt.psi()
    assert pair.e.is_valid()
