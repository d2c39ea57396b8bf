"""
Test suite for Steinberg words, torus words and the Steinberg relation audits.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from linear.generators import gen_h, gen_x
from linear.matrices import Matrix, MonomialMatrix
from ring.exceptions import ConfigurationError, DomainError
from ring.laurent import LaurentPoly, commutator, random_poly, random_unit
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec
from symbols.certificates import TAME, distinguishing

from .audits import STEINBERG_FAMILIES, audit_steinberg, certified_outcome
from .torus import PHI, TorusWord, torus_c, torus_h
from .words import StLetter, StWord, commutator_word, hat_c, hat_h, hat_w, hat_x, st_phi

F4 = build_ring(load_ring_spec('F4'))
F5 = build_ring(load_ring_spec('F5'))
F9 = build_ring(load_ring_spec('F9'))
QUAT = build_ring(load_ring_spec('H'))


def poly(text, ring=F4):
    return parse_poly(ring, text)


def random_st_word(ring, n, rng, length):
    letters = []
    for _ in range(length):
        i, j = rng.sample(range(1, n + 1), 2)
        letters.append(StLetter(i, j, random_poly(ring, rng, 2)))
    return StWord(ring, n, tuple(letters))


class StWordTestCase(SimpleTestCase):
    """Test cases for Steinberg words and the projection phi."""

    def test_phi_of_letter(self):
        """Test phi(x^_12(f)) = x_12(f)."""
        f = poly('g*t^1+1')
        self.assertEqual(st_phi(hat_x(2, 1, 2, f)), gen_x(2, 1, 2, f))

    def test_phi_of_empty_word(self):
        """Test that the empty word maps to the identity."""
        self.assertTrue(st_phi(StWord(F4, 3)).is_identity())

    def test_letter_inverse_negates_payload(self):
        letter = StLetter(1, 2, poly('t'))
        self.assertEqual(letter.inverse().payload, -poly('t'))
        self.assertEqual(str(letter), 'X[1,2](t^1)')

    def test_free_reduction_cancels_adjacent_pairs(self):
        """Test that only adjacent letter/inverse pairs cancel."""
        f, g = poly('t'), poly('g')
        word = hat_x(3, 1, 2, f) * hat_x(3, 2, 3, g) * hat_x(3, 2, 3, -g) * hat_x(3, 1, 2, -f)
        self.assertEqual(len(word.reduced()), 0)
        kept = hat_x(3, 1, 2, f) * hat_x(3, 2, 3, g) * hat_x(3, 1, 2, -f)
        self.assertEqual(len(kept.reduced()), 3)

    def test_bad_indices_rejected(self):
        with self.assertRaises(DomainError):
            hat_x(2, 1, 1, poly('1'))
        with self.assertRaises(DomainError):
            hat_x(2, 1, 3, poly('1'))

    def test_rank_mismatch_rejected(self):
        with self.assertRaises(DomainError):
            hat_x(2, 1, 2, poly('1')) * hat_x(3, 1, 2, poly('1'))

    def test_hat_h_maps_to_diagonal(self):
        """Test phi(h^_12(u)) = diag(u, u^-1)."""
        u = poly('g*t^2')
        self.assertEqual(st_phi(hat_h(2, 1, 2, u)), gen_h(2, 1, 2, u))
        self.assertEqual(st_phi(hat_h(3, 2, 3, u)), gen_h(3, 2, 3, u))

    def test_hat_c_image(self):
        """Test phi(c^(g t, g)) = diag(g, 1) over F4."""
        u, v = poly('g*t^1'), poly('g')
        expected = MonomialMatrix.diagonal([poly('g'), poly('1')]).to_matrix()
        self.assertEqual(st_phi(hat_c(2, u, v)), expected)

    def test_hat_c_trivial_arguments(self):
        one = poly('1')
        self.assertTrue(st_phi(hat_c(2, one, one)).is_identity())

    def test_hat_w_needs_unit(self):
        with self.assertRaises(DomainError):
            hat_w(2, 1, 2, poly('1+t'))
        with self.assertRaises(DomainError):
            hat_c(2, poly('t'), poly('0'))

    def test_hat_c_in_kernel_iff_commuting(self):
        """Test that c^(u, v) lies in Ker phi exactly when [u, v] = 1."""
        self.assertFalse(st_phi(hat_c(2, poly('t'), poly('g'))).is_identity())
        self.assertTrue(st_phi(hat_c(2, poly('t', F5), poly('2', F5))).is_identity())
        self.assertTrue(st_phi(hat_c(3, poly('t^2'), poly('t^-1'))).is_identity())


class TorusWordTestCase(SimpleTestCase):
    """Test cases for torus words and their certificates."""

    def test_h_ij_h_ji_is_trivial(self):
        """Test h^_12(u) h^_21(u) = 1 in the normal form and under phi."""
        u = poly('g*t^1')
        word = torus_h(F4, 2, 1, 2, u) * torus_h(F4, 2, 2, 1, u)
        self.assertTrue(word.normal_form().is_identity())
        self.assertTrue(st_phi(word.to_word()).is_identity())

    def test_certificates_carry_phi_and_tame(self):
        word = torus_c(F5, 2, poly('t', F5), poly('2', F5))
        names = [certificate.name for certificate in word.certificates()]
        self.assertIn(PHI, names)
        self.assertIn(TAME, names)
        tame = [c.value for c in word.certificates() if c.name == TAME]
        self.assertEqual(tame, ['3'])

    def test_no_tame_certificate_over_twisted_rings(self):
        word = torus_c(F4, 2, poly('t'), poly('g'))
        self.assertNotIn(TAME, [certificate.name for certificate in word.certificates()])

    def test_tame_distinguishes_kernel_symbol_from_identity(self):
        """Test that c^(t, 2) over F5 has trivial phi image but is told apart from 1."""
        word = torus_c(F5, 2, poly('t', F5), poly('2', F5))
        identity = TorusWord(F5, 2)
        self.assertEqual(distinguishing(word.certificates(), identity.certificates()), TAME)
        outcome = certified_outcome('kernel', word, identity)
        self.assertFalse(outcome.passed)
        self.assertEqual(outcome.instance['certificate'], TAME)

    def test_inverse_word(self):
        word = torus_c(QUAT, 3, poly('i*t^1', QUAT), poly('j', QUAT), 1, 3)
        product = word * word.inverse()
        self.assertTrue(product.normal_form().pi().to_matrix().is_identity())
        self.assertTrue(st_phi(product.to_word()).is_identity())

    def test_string_form(self):
        word = torus_h(F4, 2, 1, 2, poly('t'), -1)
        self.assertEqual(str(word), 'hh[1,2](t^1)^-1')
        self.assertEqual(str(TorusWord(F4, 2)), '1')


class SteinbergAuditTestCase(SimpleTestCase):
    """Test cases for audit_steinberg."""

    def test_rank_two_families_pass(self):
        for family in ('ST1', "ST2'", 'RH6', 'T1', 'T2', 'T3', 'T4', 'T5', 'T6', 'T7', 'T8'):
            report = audit_steinberg(family, F4, 2, samples=4, seed=1, degree_cap=2)
            self.assertTrue(report.passed, msg=f"{family}: {report.to_dict()}")

    def test_rank_three_families_pass(self):
        for family in ('ST2', 'RH6', 'TT0', 'TT1', 'TT2', 'TT3', 'TT4', 'TT5', 'TT6', 'TT7', 'T5'):
            report = audit_steinberg(family, F4, 3, samples=3, seed=2, degree_cap=2)
            self.assertTrue(report.passed, msg=f"{family}: {report.to_dict()}")

    def test_commutative_torus_families_pass_with_tame_certificate(self):
        """Test that the torus families hold under the tame certificate over F5."""
        for family in ('T2', 'T4', 'T6', 'T7', 'T8'):
            self.assertTrue(audit_steinberg(family, F5, 2, samples=5, seed=3).passed, msg=family)
        for family in ('TT3', 'TT5', 'TT6', 'TT7'):
            self.assertTrue(audit_steinberg(family, F5, 3, samples=5, seed=3).passed, msg=family)

    def test_quaternion_families_pass(self):
        for family in ('T1', 'T3', 'T8', 'RH6'):
            self.assertTrue(audit_steinberg(family, QUAT, 2, samples=3, seed=4, degree_cap=1).passed,
                            msg=family)

    def test_printed_forms_are_informational(self):
        """Test that the printed RH6 and TT5 forms appear only as informational rows."""
        report = audit_steinberg('RH6', QUAT, 2, samples=6, seed=5, degree_cap=2)
        informational = [row for row in report.sorted_rows() if row.informational]
        self.assertEqual(len(informational), 2)
        self.assertTrue(report.passed)
        report = audit_steinberg('TT5', F9, 3, samples=4, seed=5, degree_cap=2)
        self.assertTrue(any(row.informational for row in report.sorted_rows()))
        self.assertTrue(report.passed)

    def test_st2_has_no_rank_two_instances(self):
        report = audit_steinberg('ST2', F4, 2, samples=2, seed=0)
        self.assertEqual(report.rows, {})
        self.assertIn('ST2 has no instances for n=2', report.notes)

    def test_tt_families_need_rank_three(self):
        with self.assertRaises(ConfigurationError):
            audit_steinberg('TT4', F4, 2, samples=1, seed=0)

    def test_unknown_family(self):
        with self.assertRaises(ConfigurationError):
            audit_steinberg('T9', F4, 2, samples=1, seed=0)
        self.assertEqual(len(STEINBERG_FAMILIES), 20)

    def test_same_seed_same_report(self):
        first = audit_steinberg('T4', F9, 2, samples=3, seed=11, workers=2)
        second = audit_steinberg('T4', F9, 2, samples=3, seed=11)
        self.assertEqual(first.to_dict(), second.to_dict())


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.sampled_from([F4, QUAT]), strat.integers(2, 3))
def test_phi_is_a_homomorphism(seed, ring, n):
    rng = random.Random(seed)
    left = random_st_word(ring, n, rng, rng.randint(0, 4))
    right = random_st_word(ring, n, rng, rng.randint(0, 4))
    assert st_phi(left * right) == st_phi(left) * st_phi(right)
    assert st_phi(left * left.inverse()).is_identity()


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32))
def test_torus_normal_form_matches_phi(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 3)
    word = TorusWord(F9, n)
    for _ in range(rng.randint(1, 4)):
        i, j = rng.sample(range(1, n + 1), 2)
        word = word * torus_h(F9, n, i, j, random_unit(F9, rng, 2), rng.choice((1, -1)))
    assert word.normal_form().pi().to_matrix() == st_phi(word.to_word())


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32))
def test_hat_c_image_is_the_commutator(seed):
    rng = random.Random(seed)
    u, v = random_unit(QUAT, rng, 2), random_unit(QUAT, rng, 2)
    one = LaurentPoly.one(QUAT)
    expected = MonomialMatrix.diagonal([commutator(u, v), one]).to_matrix()
    assert st_phi(hat_c(2, u, v)) == expected
    assert st_phi(commutator_word(hat_x(2, 1, 2, u), hat_x(2, 1, 2, v))) == Matrix.identity(QUAT, 2)
