"""
Test suite for symbol words, torus normal forms, certificates and the P/Q audits.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from linear.generators import gen_h
from ring.exceptions import ConfigurationError, DomainError, UnsupportedQuotientError
from ring.laurent import LaurentPoly, random_unit
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec

from .audits import GENERAL_FAMILIES, SYMPLECTIC_FAMILIES, audit_symbols
from .certificates import (COMMUTATOR, TAME, QuotientCertificate, centrality_check, certificates_of,
                           distinguishing)
from .torus import TorusElement
from .words import (GENERAL, SYMPLECTIC, Symbol, SymbolWord, is_kernel_witness, presentation_for,
                    symbol_image, tame_symbol, tame_value)

F4 = build_ring(load_ring_spec('F4'))
F5 = build_ring(load_ring_spec('F5'))
F7 = build_ring(load_ring_spec('F7'))
F9 = build_ring(load_ring_spec('F9'))
QUAT = build_ring(load_ring_spec('H'))


def poly(text, ring=F4):
    return parse_poly(ring, text)


def c(ring, u, v, power=1, presentation=SYMPLECTIC):
    return SymbolWord.of(ring, poly(u, ring), poly(v, ring), power, presentation)


class SymbolWordTestCase(SimpleTestCase):
    """Test cases for symbol words and their commutator image."""

    def test_image_of_twisted_symbol(self):
        """Test that c(g t, g) over F4 maps to g."""
        self.assertEqual(symbol_image(c(F4, 'g*t^1', 'g')), poly('g'))

    def test_diagonal_symbol_is_trivial(self):
        self.assertTrue(symbol_image(c(QUAT, 'i*t^2', 'i*t^2')).is_one())

    def test_commuting_pair_cancels(self):
        word = c(F5, 't', '2') * c(F5, '2', 't')
        self.assertTrue(symbol_image(word).is_one())

    def test_kernel_witnesses(self):
        self.assertTrue(is_kernel_witness(SymbolWord(F4, SYMPLECTIC)))
        self.assertFalse(is_kernel_witness(c(F4, 'g*t^1', 'g')))
        self.assertTrue(is_kernel_witness(c(F5, 't', '2') * c(F5, '2', 't')))
        self.assertTrue(is_kernel_witness(c(F5, 't', '2')))

    def test_symbol_needs_units(self):
        with self.assertRaises(DomainError):
            Symbol(poly('1+t'), poly('1'))
        with self.assertRaises(DomainError):
            Symbol(poly('t'), poly('1'), 2)

    def test_presentations_do_not_mix(self):
        with self.assertRaises(DomainError):
            c(F5, 't', '2') * c(F5, 't', '2', presentation=GENERAL)
        self.assertEqual(presentation_for(2), SYMPLECTIC)
        self.assertEqual(presentation_for(4), GENERAL)
        with self.assertRaises(DomainError):
            presentation_for(1)

    def test_inverse_and_string_form(self):
        word = c(F5, 't', '2') * c(F5, '3', 't^-1', -1)
        self.assertEqual(str(word), 'c(t^1,2)*c(3,t^-1)^-1')
        self.assertEqual(str(word.inverse()), 'c(3,t^-1)*c(t^1,2)^-1')
        self.assertEqual(str(SymbolWord(F5, SYMPLECTIC)), '1')

    def test_conjugation_is_letterwise(self):
        word = c(F4, 'g', 't').conjugated(poly('t'))
        self.assertEqual(word.symbols[0].u, poly('g^2'))
        self.assertEqual(word.symbols[0].v, poly('t'))


class TameSymbolTestCase(SimpleTestCase):
    """Test cases for the tame symbol."""

    def test_known_values(self):
        """Test tame(t, 2) = 3 and tame(t, t) = 4 over F5."""
        self.assertEqual(tame_symbol(poly('t', F5), poly('2', F5)), F5.from_int(3))
        self.assertEqual(tame_symbol(poly('t', F5), poly('t', F5)), F5.from_int(4))
        self.assertTrue(tame_symbol(poly('2', F5), poly('3', F5)).is_one())

    def test_word_value(self):
        word = c(F5, 't', '2') * c(F5, 't', '2')
        self.assertEqual(tame_value(word), F5.from_int(4))
        self.assertTrue(tame_value(word * word.inverse()).is_one())

    def test_unsupported_rings(self):
        with self.assertRaises(UnsupportedQuotientError):
            tame_symbol(poly('t'), poly('g'))
        with self.assertRaises(UnsupportedQuotientError):
            tame_value(c(QUAT, 't', 'i'))

    def test_relation_three_example(self):
        """Test c(2, 1 - 2) over F5: trivial tame and commutator images."""
        word = c(F5, '2', '4')
        self.assertTrue(tame_value(word).is_one())
        self.assertTrue(symbol_image(word).is_one())


class TorusElementTestCase(SimpleTestCase):
    """Test cases for the torus normal forms."""

    def test_h_ij_h_ji(self):
        u = poly('g*t^1')
        self.assertTrue((TorusElement.h(2, 1, 2, u) * TorusElement.h(2, 2, 1, u)).is_identity())
        self.assertTrue((TorusElement.h(3, 1, 3, u) * TorusElement.h(3, 3, 1, u)).is_identity())

    def test_pi_matches_matrices(self):
        u, v = poly('g*t^1'), poly('t^-2')
        for n, (i, j), (k, l) in ((2, (1, 2), (2, 1)), (3, (2, 3), (1, 2)), (4, (4, 2), (3, 1))):
            element = TorusElement.h(n, i, j, u) * TorusElement.h(n, k, l, v)
            expected = gen_h(n, i, j, u) * gen_h(n, k, l, v)
            self.assertEqual(element.pi().to_matrix(), expected)

    def test_product_emits_symbol(self):
        """Test h(t) h(2) = c(t, 2) h(2t) over F5."""
        element = TorusElement.h(2, 1, 2, poly('t', F5)) * TorusElement.h(2, 1, 2, poly('2', F5))
        self.assertEqual(str(element.xi), 'c(t^1,2)')
        self.assertEqual(element.payloads, (poly('2*t', F5),))

    def test_inverse(self):
        element = TorusElement.h(3, 2, 3, poly('i*t^1', QUAT)) * TorusElement.h(3, 1, 2, poly('j', QUAT))
        product = element * element.inverse()
        self.assertTrue(product.pi().to_matrix().is_identity())

    def test_generators_validated(self):
        with self.assertRaises(DomainError):
            TorusElement.h(2, 1, 1, poly('t'))
        with self.assertRaises(DomainError):
            TorusElement.h(2, 1, 2, poly('1+t'))
        with self.assertRaises(DomainError):
            TorusElement.from_symbols(c(F5, 't', '2'), 3)


class CertificateTestCase(SimpleTestCase):
    """Test cases for quotient certificates and the centrality check."""

    def test_certificate_names(self):
        names = [certificate.name for certificate in certificates_of(c(F5, 't', '2'))]
        self.assertEqual(names, [COMMUTATOR, TAME])
        names = [certificate.name for certificate in certificates_of(c(F9, 't', 'g'))]
        self.assertEqual(names, [COMMUTATOR])

    def test_distinguishing(self):
        left = [QuotientCertificate(COMMUTATOR, '1'), QuotientCertificate(TAME, '3')]
        right = [QuotientCertificate(COMMUTATOR, '1'), QuotientCertificate(TAME, '1')]
        self.assertEqual(distinguishing(left, right), TAME)
        self.assertIsNone(distinguishing(left, left))
        self.assertIsNone(distinguishing(left, [QuotientCertificate(COMMUTATOR, '1')]))

    def test_nontrivial_kernel_class(self):
        """Test that c(t, 2) over F5 is a kernel witness told apart from 1 by the tame symbol."""
        word = c(F5, 't', '2')
        self.assertTrue(is_kernel_witness(word))
        identity = SymbolWord(F5, SYMPLECTIC)
        self.assertEqual(distinguishing(certificates_of(word), certificates_of(identity)), TAME)

    def test_centrality(self):
        self.assertTrue(centrality_check(SymbolWord(F5, SYMPLECTIC), c(F5, 't', '3')))
        xi = c(F5, 't', '2') * c(F5, '2', 't')
        self.assertTrue(centrality_check(xi, c(F5, 't', '3')))

    def test_centrality_needs_kernel_witness(self):
        with self.assertRaises(DomainError):
            centrality_check(c(F4, 'g*t^1', 'g'), c(F4, 't', 'g'))


class SymbolAuditTestCase(SimpleTestCase):
    """Test cases for audit_symbols."""

    def test_symplectic_families_pass(self):
        for family in SYMPLECTIC_FAMILIES:
            self.assertTrue(audit_symbols(family, F9, samples=4, seed=1, degree_cap=2).passed, msg=family)
            self.assertTrue(audit_symbols(family, F5, samples=4, seed=1).passed, msg=family)

    def test_general_families_pass(self):
        for family in GENERAL_FAMILIES:
            self.assertTrue(audit_symbols(family, QUAT, samples=3, seed=2, degree_cap=1).passed, msg=family)
            self.assertTrue(audit_symbols(family, F7, samples=4, seed=2).passed, msg=family)

    def test_tame_laws(self):
        for ring in (F5, F7, build_ring(load_ring_spec('F9:0'))):
            report = audit_symbols('steinberg', ring, samples=20, seed=3)
            self.assertTrue(report.passed, msg=str(report.to_dict()))
            self.assertIn(('steinberg', 's,1-s exhaustive'), report.rows)

    def test_tame_laws_need_untwisted_commutative_ring(self):
        with self.assertRaises(ConfigurationError):
            audit_symbols('steinberg', F4, samples=1, seed=0)

    def test_p4_readings_reported_separately(self):
        report = audit_symbols('P4', F9, samples=10, seed=4)
        self.assertIn(('P4', '1-u unit'), report.rows)
        self.assertIn(('P4', 's in D'), report.rows)

    def test_unknown_family(self):
        with self.assertRaises(ConfigurationError):
            audit_symbols('P6', F5, samples=1, seed=0)


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.sampled_from([F9, QUAT]))
def test_symbol_image_is_a_homomorphism(seed, ring):
    rng = random.Random(seed)
    units = [random_unit(ring, rng, 2) for _ in range(4)]
    left = SymbolWord.of(ring, units[0], units[1])
    right = SymbolWord.of(ring, units[2], units[3], -1)
    assert symbol_image(left * right) == symbol_image(left) * symbol_image(right)
    assert symbol_image(left * left.inverse()).is_one()


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32))
def test_tame_respects_cocycle_relation(seed):
    rng = random.Random(seed)
    u, v, w = (random_unit(F7, rng, 3) for _ in range(3))
    lhs = SymbolWord.of(F7, u, v) * SymbolWord.of(F7, v * u, w)
    rhs = SymbolWord.of(F7, u, v * w) * SymbolWord.of(F7, v, w)
    assert tame_value(lhs) == tame_value(rhs)


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.integers(2, 4))
def test_torus_normal_form_pi_is_multiplicative(seed, n):
    rng = random.Random(seed)
    element, expected = TorusElement.identity(F9, n), gen_h(n, 1, 2, LaurentPoly.one(F9))
    for _ in range(3):
        i, j = rng.sample(range(1, n + 1), 2)
        u = random_unit(F9, rng, 2)
        element = element * TorusElement.h(n, i, j, u)
        expected = expected * gen_h(n, i, j, u)
    assert element.pi().to_matrix() == expected
