"""
Test suite for monomial conjugation, UNU factorization and the double-coset steps.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from linear.generators import (GroupWord, gen_w, gen_x, gen_x_affine, in_U, random_u_word,
                               random_word, w_letter, x_letter)
from linear.matrices import Matrix, MonomialMatrix, monomial_parts
from ring.exceptions import ConfigurationError, DomainError
from ring.laurent import LaurentPoly
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec
from roots.affine import AffineRoot

from .audits import ALPHA0, ALPHA1, BRUHAT_FAMILIES, audit_bruhat, corpus_words
from .conjugation import conj_by_monomial, image_root
from .factorization import (FOLDED, LEFT, REGULAR, RIGHT, Factorization, factorize, local_coordinate,
                            rho, rho_step, rho_step_detail)
from .unipotent import unipotent_word

F4 = build_ring(load_ring_spec('F4'))
F5 = build_ring(load_ring_spec('F5'))
QUAT = build_ring(load_ring_spec('H'))


def poly(text, ring=F4):
    return parse_poly(ring, text)


def word(ring, n, *letters):
    return GroupWord(ring, n, letters)


class ConjugationTestCase(SimpleTestCase):
    """Test cases for conj_by_monomial."""

    def test_identity_fixes_root(self):
        """Test that conjugating by I returns the same root and coefficient."""
        root = AffineRoot.of(2, 1, 3)
        result = conj_by_monomial(MonomialMatrix.identity(F4, 2), root, F4.generator)
        self.assertEqual(result.root, root)
        self.assertEqual(result.coeff, F4.generator)

    def test_diagonal_t_raises_level(self):
        """Test diag(t,1) x_12(f) diag(t^-1,1) = x_(e1-e2,1)(tau(f))."""
        w = MonomialMatrix.diagonal([poly('t'), poly('1')])
        g = F4.generator
        result = conj_by_monomial(w, ALPHA1, g)
        self.assertEqual(result.root, AffineRoot.of(1, 2, 1))
        self.assertEqual(result.coeff, F4.tau_pow(g, 1))
        expected = w.to_matrix() * gen_x_affine(2, ALPHA1, g) * w.inverse().to_matrix()
        self.assertEqual(result.matrix(2), expected)

    def test_permutation_moves_indices(self):
        """Test that a unit-diagonal 3-cycle permutes indices and keeps the level."""
        w = MonomialMatrix((2, 3, 1), (LaurentPoly.one(F4),) * 3)
        result = conj_by_monomial(w, AffineRoot.of(1, 3, 2), F4.one)
        self.assertEqual(result.root, AffineRoot.of(2, 1, 2))
        self.assertEqual(image_root(w, AffineRoot.of(1, 3, 2)), AffineRoot.of(2, 1, 2))

    def test_inverse_sign(self):
        """Test that sign -1 undoes sign +1."""
        w = monomial_parts(gen_w(3, 1, 3, parse_poly(QUAT, 'j*t^2')))
        root = AffineRoot.of(3, 2, -1)
        f = parse_poly(QUAT, '1+k').coefficient(0)
        forward = conj_by_monomial(w, root, f, 1)
        back = conj_by_monomial(w, forward.root, forward.coeff, -1)
        self.assertEqual((back.root, back.coeff), (root, f))

    def test_bad_sign(self):
        """Test that only +1 and -1 are accepted."""
        with self.assertRaises(DomainError):
            conj_by_monomial(MonomialMatrix.identity(F4, 2), ALPHA1, F4.one, 2)


class UnipotentWordTestCase(SimpleTestCase):
    """Test cases for writing elements of U as positive words."""

    def test_random_u_matrix_round_trip(self):
        """Test that the positive word of a U-element evaluates back to it."""
        rng = random.Random(5)
        m = random_u_word(F4, 3, rng, length=5).matrix()
        letters = unipotent_word(m)
        self.assertTrue(all(letter.root.is_positive for letter in letters))
        self.assertEqual(GroupWord(F4, 3, tuple(letters)).matrix(), m)

    def test_outside_U_rejected(self):
        """Test that a monomial matrix has no positive word."""
        with self.assertRaises(DomainError):
            unipotent_word(gen_w(2, 1, 2, poly('1')))


class FactorizeTestCase(SimpleTestCase):
    """Test cases for factorize and rho."""

    def test_positive_letter(self):
        """Test that e in U factors with trivial monomial part."""
        e = word(F4, 2, x_letter(1, 2, poly('g')))
        fac = factorize(e)
        self.assertEqual(fac.w, MonomialMatrix.identity(F4, 2))
        self.assertEqual(fac.matrix(), e.matrix())
        self.assertTrue(fac.is_valid())

    def test_lower_letter(self):
        """Test x_21(g) = x_12(g^-1) w_12(-g^-1) x_12(g^-1)."""
        g = poly('g')
        fac = factorize(word(F4, 2, x_letter(2, 1, g)))
        self.assertEqual(fac.w, monomial_parts(gen_w(2, 1, 2, -g.inverse())))
        self.assertEqual(fac.u, gen_x(2, 1, 2, g.inverse()))
        self.assertEqual(fac.v, gen_x(2, 1, 2, g.inverse()))

    def test_lower_letter_over_f5(self):
        """Test the x_21(1) factorization over F5."""
        one = poly('1', F5)
        fac = factorize(word(F5, 2, x_letter(2, 1, one)))
        self.assertEqual(fac.u, gen_x(2, 1, 2, one))
        self.assertEqual(fac.w, monomial_parts(gen_w(2, 1, 2, -one)))
        self.assertEqual(fac.v, gen_x(2, 1, 2, one))
        self.assertEqual(fac.to_dict()['sigma'], [2, 1])

    def test_monomial_word(self):
        """Test that w_12(u) is its own monomial part."""
        u = poly('g*t^2')
        fac = factorize(word(F4, 2, w_letter(1, 2, u)))
        self.assertEqual(fac.w, monomial_parts(gen_w(2, 1, 2, u)))
        self.assertEqual(fac.matrix(), gen_w(2, 1, 2, u))

    def test_rho_of_unu_word(self):
        """Test rho(x_12(f) w_12(1) x_12(g)) = w_12(1)."""
        e = word(F4, 2, x_letter(1, 2, poly('g')), w_letter(1, 2, poly('1')), x_letter(1, 2, poly('t+1')))
        self.assertEqual(rho(e), monomial_parts(gen_w(2, 1, 2, poly('1'))))

    def test_orders_agree_over_quaternions(self):
        """Test that both absorption orders find the same monomial part."""
        rng = random.Random(17)
        e = random_word(QUAT, 3, rng, length=4, level_cap=1)
        self.assertEqual(factorize(e, order=LEFT).w, factorize(e, order=RIGHT).w)

    def test_unknown_order(self):
        """Test that an unknown absorption order is rejected."""
        with self.assertRaises(DomainError):
            factorize(word(F4, 2), order='sideways')

    def test_empty_word(self):
        """Test that the empty word factors as the identity."""
        fac = factorize(word(F4, 3))
        self.assertEqual(fac, Factorization.identity(F4, 3))
        self.assertEqual(str(fac.u_word), '1')


class LocalCoordinateTestCase(SimpleTestCase):
    """Test cases for reading x_a components off u and v."""

    def fac_with_v(self, v):
        identity = Matrix.identity(F4, v.n)
        return Factorization(identity, MonomialMatrix.identity(F4, v.n), v)

    def test_constant_entry(self):
        """Test v = x_12(g) at alpha_1."""
        fac = self.fac_with_v(gen_x(2, 1, 2, poly('g')))
        self.assertEqual(local_coordinate(fac, ALPHA1, RIGHT), F4.generator)

    def test_no_constant_term(self):
        """Test v = x_12(g t) at alpha_1 gives 0."""
        fac = self.fac_with_v(gen_x(2, 1, 2, poly('g*t')))
        self.assertTrue(local_coordinate(fac, ALPHA1, RIGHT).is_zero())

    def test_affine_simple_root(self):
        """Test v = xa[2,1,1](g) at alpha_0."""
        fac = self.fac_with_v(gen_x_affine(2, ALPHA0, F4.generator))
        self.assertEqual(local_coordinate(fac, ALPHA0, RIGHT), F4.generator)

    def test_left_sign_convention(self):
        """Test that u = x_12(g) reads as f = -g on the left."""
        identity = Matrix.identity(F5, 2)
        fac = Factorization(gen_x(2, 1, 2, poly('2', F5)), MonomialMatrix.identity(F5, 2), identity)
        self.assertEqual(local_coordinate(fac, ALPHA1, LEFT), F5.from_int(-2))

    def test_non_simple_root_rejected(self):
        """Test that a non-simple root is refused."""
        fac = Factorization.identity(F4, 3)
        with self.assertRaises(DomainError):
            local_coordinate(fac, AffineRoot.of(1, 3, 0), RIGHT)


class RhoStepTestCase(SimpleTestCase):
    """Test cases for the single-letter double-coset updates."""

    def test_zero_coordinate_branch(self):
        """Test that a left step on w_12(u) prepends w_a(1)."""
        u = poly('g*t')
        fac = factorize(word(F4, 2, w_letter(1, 2, u)))
        step = rho_step_detail(fac, ALPHA1, LEFT)
        self.assertEqual(step.branch, REGULAR)
        self.assertEqual(step.factorization.w, monomial_parts(gen_w(2, 1, 2, poly('1')) * gen_w(2, 1, 2, u)))

    def test_folded_branch_over_f5(self):
        """Test x_21(1) w_12(-1) = [[0,-1],[1,-1]] keeps w_12(-1)."""
        one = poly('1', F5)
        fac = factorize(word(F5, 2, x_letter(2, 1, one)))
        step = rho_step_detail(fac, ALPHA1, RIGHT)
        self.assertEqual(step.branch, FOLDED)
        self.assertTrue(step.coordinate.is_one())
        self.assertEqual(step.factorization.w, monomial_parts(gen_w(2, 1, 2, -one)))
        expected = Matrix.from_entries(F5, 2, {(1, 1): LaurentPoly.zero(F5), (1, 2): -one,
                                               (2, 1): one, (2, 2): -one})
        self.assertEqual(step.factorization.matrix(), expected)
        scratch = factorize(word(F5, 2, x_letter(2, 1, one), w_letter(1, 2, -one)))
        self.assertEqual(scratch.w, step.factorization.w)

    def test_step_keeps_u_and_v_in_U(self):
        """Test both sides at every simple root of n = 3 over F4."""
        rng = random.Random(2)
        fac = factorize(random_word(F4, 3, rng, length=5, level_cap=1))
        for root in (ALPHA1, AffineRoot.of(2, 3, 0), AffineRoot.of(3, 1, 1)):
            for side in (LEFT, RIGHT):
                stepped = rho_step(fac, root, side)
                self.assertTrue(in_U(stepped.u) and in_U(stepped.v))


class BruhatAuditTestCase(SimpleTestCase):
    """Test cases for the factorization audit families."""

    def test_all_families_pass_over_f4(self):
        """Test every family at n = 2 and 3 over F4."""
        for n in (2, 3):
            for family in BRUHAT_FAMILIES:
                report = audit_bruhat(family, F4, n, samples=4, seed=9, degree_cap=2, word_length=5)
                self.assertTrue(report.passed, f"{family} n={n}: {report.to_dict()}")

    def test_coset_steps_over_quaternions(self):
        """Test the sixteen k-coefficient subcases over the quaternions."""
        report = audit_bruhat('coset_steps', QUAT, 2, samples=10, seed=4, degree_cap=2)
        self.assertTrue(report.passed)
        verified = [row for row in report.sorted_rows() if not row.informational]
        self.assertEqual(len(verified), 16)
        opposite = [row for row in report.sorted_rows() if row.informational]
        self.assertTrue(any(row.failures > 0 for row in opposite))

    def test_corpus_replay(self):
        """Test that a saved corpus drives the same checks deterministically."""
        corpus = corpus_words(F4, 2, seed=3, count=5, word_length=4, degree_cap=1)
        self.assertEqual([str(e) for e in corpus],
                         [str(e) for e in corpus_words(F4, 2, seed=3, count=5, word_length=4, degree_cap=1)])
        first = audit_bruhat('factorization', F4, 2, samples=5, seed=1, corpus=corpus)
        second = audit_bruhat('factorization', F4, 2, samples=5, seed=99, corpus=corpus)
        self.assertEqual(first.to_dict()['rows'], second.to_dict()['rows'])

    def test_unknown_family(self):
        """Test that an unknown family is a configuration error."""
        with self.assertRaises(ConfigurationError):
            audit_bruhat('bruhat', F4, 2, samples=1, seed=0)


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.integers(2, 3))
def test_factorization_reproduces_word(seed, n):
    rng = random.Random(seed)
    e = random_word(F4, n, rng, length=rng.randint(1, 6), level_cap=1)
    fac = factorize(e)
    assert fac.matrix() == e.matrix()
    assert fac.is_valid()
    assert GroupWord(F4, n, fac.u_word.letters).matrix() == fac.u


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32))
def test_rho_is_double_coset_invariant(seed):
    rng = random.Random(seed)
    e = random_word(F4, 2, rng, length=4, level_cap=1)
    before = random_u_word(F4, 2, rng, length=2, level_cap=1)
    after = random_u_word(F4, 2, rng, length=2, level_cap=1)
    assert rho(before * e * after) == rho(e)
