"""
Test suite for division rings, twisted Laurent polynomials and literals.
"""

import random
import tempfile
from pathlib import Path

import hypothesis
import hypothesis.strategies as strat
from django.test import SimpleTestCase

from .auditing import AuditReport, Outcome, run_family
from .exceptions import ConfigurationError, DomainError, ParseError
from .laurent import (LaurentPoly, Unit, random_poly, tau_pow, tl_degree, tl_mul,
                      tl_unit_inverse)
from .literals import parse_poly, parse_scalar
from .scalars import build_ring
from .specs import load_ring_spec, parse_shorthand


def ring_for(text):
    return build_ring(load_ring_spec(text))


class FiniteFieldTestCase(SimpleTestCase):
    """Test cases for GF(p^k) arithmetic and Frobenius twisting."""

    def setUp(self):
        self.f4 = ring_for('F4')
        self.g = self.f4.generator

    def test_f4_generator_relation(self):
        """Test that the chosen modulus gives g^2 = g + 1 in F4."""
        self.assertEqual(self.g * self.g, self.g + self.f4.one)

    def test_f9_generator_squares_to_minus_one(self):
        """Test that F9 is built as F3[g]/(g^2 + 1)."""
        f9 = ring_for('F9')
        g = f9.generator
        self.assertEqual(g * g, f9.from_int(-1))

    def test_tau_pow_frobenius(self):
        """Test tau_pow on F4 with tau = Frobenius."""
        self.assertEqual(tau_pow(self.g, 1), self.g + self.f4.one)
        self.assertEqual(tau_pow(self.g, 2), self.g)
        self.assertEqual(tau_pow(self.g, 0), self.g)
        self.assertEqual(tau_pow(tau_pow(self.g, -1), 1), self.g)

    def test_inverse(self):
        """Test multiplicative inverses in F4 and the zero error."""
        for element in self.f4.elements():
            if element.is_zero():
                with self.assertRaises(DomainError):
                    element.inverse()
            else:
                self.assertTrue((element * element.inverse()).is_one())

    def test_prime_field_rejects_generator(self):
        """Test that the symbol g is not a literal of a prime field."""
        with self.assertRaises(ParseError):
            parse_scalar(ring_for('F5'), 'g')


class QuaternionTestCase(SimpleTestCase):
    """Test cases for rational quaternion arithmetic."""

    def setUp(self):
        self.h = ring_for('H')
        self.i, self.j, self.k = (self.h.basis(index) for index in (1, 2, 3))

    def test_hamilton_relations(self):
        """Test i^2 = j^2 = -1 and ij = k = -ji."""
        minus_one = self.h.from_int(-1)
        self.assertEqual(self.i * self.i, minus_one)
        self.assertEqual(self.j * self.j, minus_one)
        self.assertEqual(self.i * self.j, self.k)
        self.assertEqual(self.j * self.i, -self.k)

    def test_inverse_of_one_plus_i(self):
        """Test (1+i)^-1 = (1-i)/2."""
        x = parse_scalar(self.h, '1+i')
        self.assertEqual(x.inverse(), parse_scalar(self.h, '1/2-1/2*i'))

    def test_tau_is_conjugation(self):
        """Test tau = conjugation by 1+i sends j to k."""
        self.assertEqual(tau_pow(self.j, 1), self.k)
        self.assertEqual(tau_pow(tau_pow(self.j, 1), -1), self.j)

    def test_indefinite_parameters_rejected(self):
        """Test that non-division quaternion algebras are refused."""
        with self.assertRaises(ConfigurationError):
            parse_shorthand('H(1,-1)')


class LaurentPolyTestCase(SimpleTestCase):
    """Test cases for the twisted Laurent ring D_tau."""

    def setUp(self):
        self.f4 = ring_for('F4')
        self.g = self.f4.generator
        self.gt = LaurentPoly.monomial(self.f4, self.g, 1)
        self.t = LaurentPoly.t_power(self.f4, 1)

    def test_twisted_square(self):
        """Test (g t)(g t) = t^2 over F4."""
        self.assertEqual(tl_mul(self.gt, self.gt), LaurentPoly.t_power(self.f4, 2))

    def test_t_times_scalar(self):
        """Test t g = tau(g) t."""
        g = LaurentPoly.constant(self.f4, self.g)
        self.assertEqual(tl_mul(self.t, g), LaurentPoly.monomial(self.f4, self.g + self.f4.one, 1))

    def test_identity(self):
        """Test f * 1 = f."""
        self.assertEqual(self.gt * LaurentPoly.one(self.f4), self.gt)

    def test_unit_inverse(self):
        """Test (g t)^-1 = g t^-1 and the two-sided inverse property."""
        inverse = tl_unit_inverse(Unit(self.g, 1))
        self.assertEqual(inverse, Unit(self.g, -1))
        self.assertTrue((self.gt * inverse.as_poly()).is_one())
        self.assertTrue((inverse.as_poly() * self.gt).is_one())
        self.assertEqual(tl_unit_inverse(Unit(self.f4.one, 1)), Unit(self.f4.one, -1))

    def test_zero_unit_rejected(self):
        """Test that a zero coefficient is not a unit."""
        with self.assertRaises(DomainError):
            Unit(self.f4.zero, 2)

    def test_degree(self):
        """Test tl_degree and its additivity."""
        self.assertEqual(tl_degree(Unit(self.g, 3)), 3)
        self.assertEqual(tl_degree(Unit(self.g, 0)), 0)
        self.assertEqual(tl_degree(Unit(self.g, 2) * Unit(self.g, -5)), -3)
        with self.assertRaises(DomainError):
            tl_degree(self.gt + LaurentPoly.one(self.f4))

    def test_noncommutativity_witness(self):
        """Test (g t) g != g (g t) over F4 with Frobenius."""
        g = LaurentPoly.constant(self.f4, self.g)
        self.assertEqual(self.gt * g, self.t)
        self.assertNotEqual(self.gt * g, g * self.gt)

    def test_multi_term_is_not_unit(self):
        """Test that units are exactly the monomials."""
        self.assertFalse((self.t + LaurentPoly.one(self.f4)).is_unit())

    def test_mismatched_rings(self):
        """Test that mixing ring specifications raises a configuration error."""
        f9 = ring_for('F9')
        with self.assertRaises(ConfigurationError):
            tl_mul(self.t, LaurentPoly.t_power(f9, 1))


class LiteralTestCase(SimpleTestCase):
    """Test cases for the coefficient and polynomial literal parser."""

    def setUp(self):
        self.f4 = ring_for('F4')

    def test_left_and_right_products(self):
        """Test that products are evaluated in order in D_tau."""
        g = self.f4.generator
        self.assertEqual(parse_poly(self.f4, 'g*t'), LaurentPoly.monomial(self.f4, g, 1))
        self.assertEqual(parse_poly(self.f4, 't*g'), LaurentPoly.monomial(self.f4, g + self.f4.one, 1))

    def test_negative_powers(self):
        """Test t^-1 and inverses of units."""
        self.assertEqual(parse_poly(self.f4, 't^-2'), LaurentPoly.t_power(self.f4, -2))
        self.assertEqual(parse_poly(self.f4, '(g*t)^-1'), parse_poly(self.f4, 'g*t^-1'))

    def test_canonical_round_trip(self):
        """Test that printing then parsing is the identity."""
        rng = random.Random(3)
        for ring_text in ('F4', 'F9', 'F5', 'H'):
            ring = ring_for(ring_text)
            for _ in range(20):
                value = random_poly(ring, rng, 3, max_terms=3)
                self.assertEqual(parse_poly(ring, str(value)), value)

    def test_error_position(self):
        """Test that syntax errors carry the offending position."""
        with self.assertRaises(ParseError) as ctx:
            parse_poly(self.f4, 'g+*t')
        self.assertEqual(ctx.exception.position, 2)

    def test_fraction_in_prime_field(self):
        """Test that p/q in F5 is p times the inverse of q."""
        f5 = ring_for('F5')
        self.assertEqual(parse_scalar(f5, '1/2'), f5.from_int(3))


class RingSpecTestCase(SimpleTestCase):
    """Test cases for ring spec loading."""

    def test_shorthand_defaults(self):
        """Test the F<q>[:j] shorthand defaults."""
        spec = parse_shorthand('F4')
        self.assertEqual((spec.p, spec.k, spec.tau_exponent), (2, 2, 1))
        self.assertEqual(parse_shorthand('F5').tau_exponent, 0)
        self.assertEqual(parse_shorthand('F9:0').tau_exponent, 0)

    def test_not_a_prime_power(self):
        """Test that F6 is rejected."""
        with self.assertRaises(ConfigurationError):
            parse_shorthand('F6')

    def test_ring_file(self):
        """Test reading a key=value ring file."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'f9.ring'
            path.write_text('kind=finite_field\np=3\nk=2\ntau_exponent=1\n')
            spec = load_ring_spec(str(path))
        self.assertEqual((spec.p, spec.k, spec.tau_exponent), (3, 2, 1))

    def test_unknown_ring(self):
        """Test that an unknown ring argument is a configuration error."""
        with self.assertRaises(ConfigurationError):
            load_ring_spec('nonsense')


class AuditHarnessTestCase(SimpleTestCase):
    """Test cases for the seeded audit harness."""

    def test_deterministic_and_order_independent(self):
        """Test that thread fan-out merges to the same report."""
        def check(rng, index):
            yield Outcome('even' if rng.random() < 0.5 else 'odd', True, {'index': index})

        serial = run_family('demo', check, 30, seed=5)
        parallel = run_family('demo', check, 30, seed=5, workers=4)
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_failures_are_recorded(self):
        """Test that the first failing instance is kept for replay."""
        def check(rng, index):
            yield Outcome('only', index != 3, {'index': index})

        report = run_family('demo', check, 5, seed=0)
        self.assertFalse(report.passed)
        self.assertEqual(report.rows[('demo', 'only')].first_failure, {'index': 3})
        merged = AuditReport(seed=0).merge(report)
        self.assertEqual(merged.total_failures, 1)


F4 = ring_for('F4')
QUAT = ring_for('H')


@hypothesis.given(strat.integers(0, 2 ** 32), strat.sampled_from([F4, QUAT]))
def test_tl_mul_associative_and_distributive(seed, ring):
    rng = random.Random(seed)
    f, g, h = (random_poly(ring, rng, 2, max_terms=3) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h


@hypothesis.given(strat.integers(0, 2 ** 32), strat.integers(-3, 3), strat.integers(-3, 3))
def test_tau_is_a_ring_automorphism(seed, i, j):
    rng = random.Random(seed)
    for ring in (F4, QUAT):
        a, b = ring.random_element(rng), ring.random_element(rng)
        assert tau_pow(a * b, j) == tau_pow(a, j) * tau_pow(b, j)
        assert tau_pow(a + b, j) == tau_pow(a, j) + tau_pow(b, j)
        assert tau_pow(tau_pow(a, i), j) == tau_pow(a, i + j)


@hypothesis.given(strat.integers(0, 2 ** 32))
def test_unit_inverse_is_an_involution(seed):
    rng = random.Random(seed)
    u = Unit(F4.random_element(rng, nonzero=True), rng.randint(-4, 4))
    assert tl_unit_inverse(tl_unit_inverse(u)) == u
