"""
Test suite for generator matrices, monomial matrices and the (R1)-(R6) audits.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from ring.exceptions import DomainError
from ring.laurent import LaurentPoly
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec
from roots.affine import AffineRoot

from .generators import (GroupWord, gen_h, gen_w, gen_x, gen_x_affine, in_B, in_U,
                         random_u_word, random_word, w_letter, x_letter)
from .matrices import Matrix, MonomialMatrix, monomial_parts
from .relations import RELATION_FAMILIES, audit_R

F4 = build_ring(load_ring_spec('F4'))
QUAT = build_ring(load_ring_spec('H'))


def poly(text, ring=F4):
    return parse_poly(ring, text)


class GeneratorMatrixTestCase(SimpleTestCase):
    """Test cases for x, w and h matrices."""

    def test_x_places_payload(self):
        """Test that x_12(f) is I + f E_12."""
        f = poly('g*t+1')
        m = gen_x(3, 1, 2, f)
        self.assertEqual(m.entry(1, 2), f)
        self.assertTrue(all(m.entry(r, r).is_one() for r in range(1, 4)))
        self.assertTrue(m.entry(2, 1).is_zero())

    def test_zero_payload_is_identity(self):
        """Test that x_b(0) is the identity."""
        self.assertTrue(gen_x(2, 1, 2, LaurentPoly.zero(F4)).is_identity())

    def test_equal_indices_rejected(self):
        """Test that x_ii raises a domain error."""
        with self.assertRaises(DomainError):
            gen_x(2, 1, 1, poly('1'))

    def test_affine_payload_sidedness(self):
        """Test that a negative root with level 1 stores t*g as tau(g) t."""
        m = gen_x_affine(2, AffineRoot.of(2, 1, 1), F4.generator)
        self.assertEqual(m.entry(2, 1), poly('(g+1)*t'))
        self.assertEqual(m.entry(2, 1), poly('t*g'))

    def test_w_and_h_closed_forms(self):
        """Test w_12(u) = [[0,u],[-u^-1,0]] and h_12(u) = diag(u, u^-1)."""
        u = poly('g*t^2')
        w = gen_w(2, 1, 2, u)
        self.assertEqual(w.entry(1, 2), u)
        self.assertEqual(w.entry(2, 1), -u.inverse())
        self.assertTrue(w.entry(1, 1).is_zero())
        h = gen_h(2, 1, 2, u)
        self.assertTrue(h.is_diagonal())
        self.assertEqual(h.diagonal(), [u, u.inverse()])
        self.assertTrue(gen_h(3, 1, 3, poly('1')).is_identity())

    def test_w_inverse(self):
        """Test that w(u) w(-u) is the identity over the quaternions."""
        u = parse_poly(QUAT, '(1+j)*t^-1')
        self.assertTrue((gen_w(2, 1, 2, u) * gen_w(2, 1, 2, -u)).is_identity())

    def test_w_needs_unit(self):
        """Test that a non-monomial payload is rejected."""
        with self.assertRaises(DomainError):
            gen_w(2, 1, 2, poly('1+t'))


class MonomialMatrixTestCase(SimpleTestCase):
    """Test cases for extracting and multiplying monomial matrices."""

    def test_parts_of_w(self):
        """Test that w_12(u) has sigma = (1 2) and units (-u^-1, u)."""
        u = poly('g*t')
        parts = monomial_parts(gen_w(2, 1, 2, u))
        self.assertEqual(parts.sigma, (2, 1))
        self.assertEqual(parts.units, (-u.inverse(), u))
        self.assertEqual(parts.to_matrix(), gen_w(2, 1, 2, u))

    def test_parts_of_diagonal(self):
        """Test diag(t, 1)."""
        m = Matrix.from_entries(F4, 2, {(1, 1): poly('t')})
        parts = monomial_parts(m)
        self.assertTrue(parts.is_diagonal)
        self.assertEqual(parts.units, (poly('t'), poly('1')))
        self.assertEqual(parts.degree_gap(), -1)

    def test_non_monomial_rejected(self):
        """Test that a unipotent matrix is not monomial."""
        with self.assertRaises(DomainError):
            monomial_parts(gen_x(2, 1, 2, poly('g')))

    def test_product_and_inverse_match_matrices(self):
        """Test MonomialMatrix arithmetic against matrix multiplication."""
        a = monomial_parts(gen_w(3, 1, 2, parse_poly(QUAT, 'i*t')) * gen_h(3, 2, 3, parse_poly(QUAT, '1+k')))
        b = monomial_parts(gen_w(3, 2, 3, parse_poly(QUAT, 'j*t^-2')))
        self.assertEqual((a * b).to_matrix(), a.to_matrix() * b.to_matrix())
        self.assertTrue((a * a.inverse()).to_matrix().is_identity())
        self.assertEqual(MonomialMatrix.identity(QUAT, 3).to_matrix(), Matrix.identity(QUAT, 3))


class MembershipTestCase(SimpleTestCase):
    """Test cases for the U and B membership tests."""

    def test_positive_generators_in_U(self):
        """Test x for (e1-e2, 0) and (e2-e1, 1)."""
        self.assertTrue(in_U(gen_x_affine(2, AffineRoot.of(1, 2, 0), F4.generator)))
        self.assertTrue(in_U(gen_x_affine(2, AffineRoot.of(2, 1, 1), F4.generator)))

    def test_negative_generators_not_in_U(self):
        """Test x for (e2-e1, 0) and (e1-e2, -1)."""
        self.assertFalse(in_U(gen_x_affine(2, AffineRoot.of(2, 1, 0), F4.generator)))
        self.assertFalse(in_U(gen_x_affine(2, AffineRoot.of(1, 2, -1), F4.generator)))

    def test_monomial_not_in_U(self):
        """Test that w(1) is outside U and B."""
        w = gen_w(2, 1, 2, poly('1'))
        self.assertFalse(in_U(w))
        self.assertFalse(in_B(w))

    def test_constant_torus_in_B(self):
        """Test that T_0 lies in B but not in U."""
        h = gen_h(2, 1, 2, poly('g'))
        self.assertTrue(in_B(h))
        self.assertFalse(in_U(h))
        self.assertFalse(in_B(gen_h(2, 1, 2, poly('t'))))


class GroupWordTestCase(SimpleTestCase):
    """Test cases for words in generator letters."""

    def test_word_times_inverse(self):
        """Test that a word times its inverse evaluates to the identity."""
        word = GroupWord(QUAT, 3, (x_letter(1, 3, parse_poly(QUAT, 'i*t+j')),
                                   w_letter(2, 1, parse_poly(QUAT, 'k*t^2'))))
        self.assertTrue((word * word.inverse()).matrix().is_identity())
        self.assertEqual(str(GroupWord(QUAT, 3)), '1')


class RelationAuditTestCase(SimpleTestCase):
    """Test cases for the (R1)-(R6) matrix audits."""

    def test_all_families_pass_over_f4(self):
        """Test every family at n = 2, 3, 4 over F4."""
        for n in (2, 3, 4):
            for family in RELATION_FAMILIES:
                report = audit_R(family, F4, n, samples=6, seed=11, degree_cap=2)
                self.assertTrue(report.passed, f"{family} n={n}: {report.to_dict()}")

    def test_branches_covered_at_n4(self):
        """Test that every conjugation branch appears once n = 4."""
        report = audit_R('R3', F4, 4, samples=2, seed=1, degree_cap=1)
        branches = {branch for _, branch in report.rows}
        self.assertEqual(branches, {'orthogonal', 'gamma=+beta', 'gamma=-beta',
                                    'i=k', 'i=l', 'j=k', 'j=l'})

    def test_quaternion_families_pass(self):
        """Test R3-R6 over the rational quaternions at n = 3."""
        for family in ('R3', 'R4', 'R5', 'R6'):
            report = audit_R(family, QUAT, 3, samples=5, seed=3, degree_cap=1)
            self.assertTrue(report.passed, family)

    def test_printed_r4_sign_is_informational(self):
        """Test that the minus-sign R4 candidate fails without failing the report."""
        report = audit_R('R4', QUAT, 2, samples=20, seed=7, degree_cap=1)
        printed = report.rows[('R4', 'gamma=+beta (printed sign)')]
        self.assertTrue(printed.informational)
        self.assertGreater(printed.failures, 0)
        self.assertTrue(report.passed)
        self.assertEqual(report.total_failures, 0)

    def test_seeded_reports_are_reproducible(self):
        """Test that the same seed reproduces the same report with a thread pool."""
        serial = audit_R('R5', F4, 3, samples=8, seed=21)
        parallel = audit_R('R5', F4, 3, samples=8, seed=21, workers=3)
        self.assertEqual(serial.to_dict(), parallel.to_dict())


@hypothesis.given(strat.integers(0, 2 ** 32), strat.integers(2, 4))
def test_random_u_words_are_in_U(seed, n):
    rng = random.Random(seed)
    word = random_u_word(F4, n, rng, length=4)
    assert in_U(word.matrix())
    assert in_B(word.matrix())


@hypothesis.given(strat.integers(0, 2 ** 32))
def test_word_matrix_is_product_of_letters(seed):
    rng = random.Random(seed)
    word = random_word(QUAT, 3, rng, length=3, level_cap=1)
    product = Matrix.identity(QUAT, 3)
    for letter in word.letters:
        product = product * letter.matrix(3)
    assert word.matrix() == product
    assert (word.inverse() * word).matrix().is_identity()
