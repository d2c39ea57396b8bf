"""
Test suite for the affine root system and the Weyl group helpers.
"""

import random

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from ring.exceptions import DomainError

from .affine import (AffineRoot, FiniteRoot, affine_reflect, affine_roots, apply_reflections,
                     pairing, reduce_to_simple, simple_roots)
from .patterns import (CONJUGATION_BRANCHES, applicable, branch_of, commutator_branch,
                       sample_pair)
from .weyl import compose, identity, invert, length, reduced_word, simple_transposition


class PairingTestCase(SimpleTestCase):
    """Test cases for the Cartan pairing."""

    def test_values(self):
        """Test the pairing on self, adjacent and disjoint roots."""
        alpha = FiniteRoot(1, 2)
        self.assertEqual(pairing(alpha, alpha), 2)
        self.assertEqual(pairing(FiniteRoot(1, 2), FiniteRoot(2, 3)), -1)
        self.assertEqual(pairing(FiniteRoot(1, 2), FiniteRoot(3, 4)), 0)
        self.assertEqual(pairing(alpha, -alpha), -2)

    def test_diagonal_pair_rejected(self):
        """Test that eps_i - eps_i is refused."""
        with self.assertRaises(DomainError):
            FiniteRoot(2, 2)


class AffineReflectionTestCase(SimpleTestCase):
    """Test cases for affine reflections and positivity."""

    def test_alpha0_reflects_alpha1(self):
        """Test sigma_{alpha_0}(alpha_1) = (-alpha, 2) for n = 2."""
        alpha0, alpha1 = simple_roots(2)
        self.assertEqual(affine_reflect(alpha0, alpha1), AffineRoot.of(2, 1, 2))

    def test_self_reflection_negates(self):
        """Test sigma_b(b) = -b."""
        for root in affine_roots(3, 2):
            self.assertEqual(affine_reflect(root, root), -root)

    def test_positivity_rule(self):
        """Test the positive system (Delta+ x Z>=0) u (Delta- x Z>0)."""
        self.assertTrue(AffineRoot.of(1, 2, 0).is_positive)
        self.assertFalse(AffineRoot.of(2, 1, 0).is_positive)
        self.assertTrue(AffineRoot.of(2, 1, 1).is_positive)
        self.assertFalse(AffineRoot.of(1, 2, -1).is_positive)

    def test_simple_reflections_permute_positive_roots(self):
        """Test sigma_a permutes the positive roots other than a (|m| <= 4, n <= 4)."""
        for n in (2, 3, 4):
            for simple in simple_roots(n):
                for root in affine_roots(n, 3):
                    if root.is_positive and root != simple:
                        self.assertTrue(affine_reflect(simple, root).is_positive, (n, simple, root))

    def test_simple_roots(self):
        """Test the simple system for n = 2 and n = 3."""
        self.assertEqual(simple_roots(2), [AffineRoot.of(2, 1, 1), AffineRoot.of(1, 2, 0)])
        self.assertEqual(simple_roots(3)[0], AffineRoot.of(3, 1, 1))
        self.assertTrue(all(root.is_positive for root in simple_roots(4)))
        with self.assertRaises(DomainError):
            simple_roots(1)


class ReduceToSimpleTestCase(SimpleTestCase):
    """Test cases for the greedy descent to simple roots."""

    def test_simple_root_is_fixed(self):
        """Test that a simple root reduces with the empty word."""
        alpha1 = simple_roots(3)[1]
        self.assertEqual(reduce_to_simple(alpha1, 3), ([], alpha1))

    def test_highest_root(self):
        """Test that theta needs one classical reflection."""
        word, target = reduce_to_simple(AffineRoot.of(1, 3, 0), 3)
        self.assertEqual(len(word), 1)
        self.assertEqual(apply_reflections(word, target), AffineRoot.of(1, 3, 0))

    def test_recomposes_everywhere(self):
        """Test the self-verifying postcondition on every root with |m| <= 3."""
        for n in (2, 3, 4):
            simples = simple_roots(n)
            for root in affine_roots(n, 3):
                word, target = reduce_to_simple(root, n)
                self.assertIn(target, simples)
                self.assertTrue(all(letter in simples for letter in word))
                self.assertEqual(apply_reflections(word, target), root)


class WeylGroupTestCase(SimpleTestCase):
    """Test cases for permutations as Weyl group elements."""

    def test_reduced_word_rebuilds_permutation(self):
        """Test that the reduced word multiplies back to the permutation."""
        sigma = (3, 1, 4, 2)
        word = reduced_word(sigma)
        self.assertEqual(len(word), length(sigma))
        product = identity(4)
        for i in word:
            product = compose(product, simple_transposition(4, i))
        self.assertEqual(product, sigma)

    def test_longest_element_n3(self):
        """Test the lexicographically smallest word of the longest element of S_3."""
        self.assertEqual(reduced_word((3, 2, 1)), [1, 2, 1])


class RootPatternTestCase(SimpleTestCase):
    """Test cases for branch classification and sampling of root pairs."""

    def test_branch_of(self):
        """Test each index pattern between e1-e2 and another root."""
        beta = FiniteRoot(1, 2)
        self.assertEqual(branch_of(beta, FiniteRoot(1, 2)), 'gamma=+beta')
        self.assertEqual(branch_of(beta, FiniteRoot(2, 1)), 'gamma=-beta')
        self.assertEqual(branch_of(beta, FiniteRoot(1, 3)), 'i=k')
        self.assertEqual(branch_of(beta, FiniteRoot(3, 1)), 'i=l')
        self.assertEqual(branch_of(beta, FiniteRoot(2, 3)), 'j=k')
        self.assertEqual(branch_of(beta, FiniteRoot(3, 2)), 'j=l')
        self.assertEqual(branch_of(beta, FiniteRoot(3, 4)), 'orthogonal')

    def test_commutator_branch(self):
        """Test the (R2) case split and the excluded diagonal pair."""
        self.assertEqual(commutator_branch(FiniteRoot(1, 2), FiniteRoot(2, 3)), 'j=k')
        self.assertEqual(commutator_branch(FiniteRoot(1, 2), FiniteRoot(3, 1)), 'i=l')
        self.assertEqual(commutator_branch(FiniteRoot(1, 2), FiniteRoot(1, 3)), 'commuting')
        with self.assertRaises(DomainError):
            commutator_branch(FiniteRoot(1, 2), FiniteRoot(2, 1))

    def test_applicable_by_rank(self):
        """Test which branches exist for n = 2 and n = 3."""
        self.assertEqual(applicable(CONJUGATION_BRANCHES, 2), ['gamma=+beta', 'gamma=-beta'])
        self.assertNotIn('orthogonal', applicable(CONJUGATION_BRANCHES, 3))
        with self.assertRaises(DomainError):
            sample_pair(random.Random(0), 3, 'orthogonal')


@hypothesis.given(strat.integers(0, 2 ** 32), strat.sampled_from(CONJUGATION_BRANCHES))
def test_sampled_pairs_land_in_branch(seed, branch):
    beta, gamma = sample_pair(random.Random(seed), 4, branch)
    assert branch_of(beta, gamma) == branch


@hypothesis.given(strat.permutations([1, 2, 3, 4]))
def test_inverse_permutation(images):
    sigma = tuple(images)
    assert compose(sigma, invert(sigma)) == identity(4)
    assert length(invert(sigma)) == length(sigma)


@hypothesis.given(strat.integers(2, 4), strat.integers(-3, 3), strat.data())
def test_reflection_is_involution(n, level, data):
    i, j = data.draw(strat.sampled_from([(a, b) for a in range(1, n + 1)
                                          for b in range(1, n + 1) if a != b]))
    beta = AffineRoot.of(i, j, level)
    for gamma in affine_roots(n, 2):
        assert affine_reflect(beta, affine_reflect(beta, gamma)) == gamma
