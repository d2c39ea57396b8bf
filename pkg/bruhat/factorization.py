"""
Incremental UNU factorization e = u w v of elementary-group words.

Words are first rewritten into the alphabet of affine root elements with
single-term payloads; negative root elements are moved onto simple roots by
conjugating with products of w_a(1).  The running factorization then absorbs
letters one at a time: positive root elements merge into v (or u), and
w_a(+-1) letters update the monomial part by the double-coset rules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from linear.generators import (GeneratorLetter, GroupWord, affine_payload, gen_h, gen_h_affine,
                               gen_w_affine, gen_x, gen_x_affine, in_U, split_affine)
from linear.matrices import Matrix, MonomialMatrix, monomial_parts
from ring.exceptions import ConsistencyError, DomainError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing, Scalar
from roots.affine import AffineRoot, is_simple, reduce_to_simple

from .conjugation import ConjugationResult, conj_by_monomial
from .unipotent import unipotent_word

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'

REGULAR = 'regular'
FOLDED = 'folded'


@dataclass(frozen=True)
class Factorization:
    """u w v with u, v in U and w monomial."""

    u: Matrix
    w: MonomialMatrix
    v: Matrix

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'Factorization':
        one = Matrix.identity(ring, n)
        return cls(one, MonomialMatrix.identity(ring, n), one)

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def ring(self) -> DivisionRing:
        return self.w.ring

    @cached_property
    def u_word(self) -> GroupWord:
        return GroupWord(self.ring, self.n, tuple(unipotent_word(self.u)))

    @cached_property
    def v_word(self) -> GroupWord:
        return GroupWord(self.ring, self.n, tuple(unipotent_word(self.v)))

    def matrix(self) -> Matrix:
        return self.u * self.w.to_matrix() * self.v

    def is_valid(self) -> bool:
        return in_U(self.u) and in_U(self.v)

    def to_dict(self) -> dict:
        return {
            'u': str(self.u_word),
            'sigma': list(self.w.sigma),
            'units': [str(c) for c in self.w.units],
            'v': str(self.v_word),
        }


@dataclass(frozen=True)
class StepResult:
    """Outcome of one double-coset update."""
    factorization: Factorization
    branch: str
    coordinate: Scalar


# -- alphabet ---------------------------------------------------------------

def simple_w(n: int, root: AffineRoot, payload: Scalar) -> MonomialMatrix:
    return monomial_parts(gen_w_affine(n, root, payload))


def minus_one_block(ring: DivisionRing, n: int, root: AffineRoot) -> MonomialMatrix:
    """h_beta(-1): -1 at positions i and j, the square of w_a(+-1)."""
    return monomial_parts(gen_h(n, root.i, root.j, -LaurentPoly.one(ring)))


def x_atoms(letter: GeneratorLetter) -> list[GeneratorLetter]:
    """Rewrite a letter as affine root elements with single-term payloads."""
    base = letter.kind[0]
    i, j = letter.i, letter.j
    if base == 'x':
        return [GeneratorLetter('xa', *split_affine(i, j, mono)) for mono in letter.poly().monomials()]
    u = letter.poly()
    if base == 'w':
        return _w_atoms(i, j, u)
    if letter.power == -1:
        u = u.inverse()
    return _w_atoms(i, j, u) + _w_atoms(i, j, -LaurentPoly.one(u.ring))


def _w_atoms(i: int, j: int, u: LaurentPoly) -> list[GeneratorLetter]:
    if not u.is_unit():
        raise DomainError(f"w[{i},{j}] needs a unit payload, got {u}")
    middle = -u.inverse()
    return [GeneratorLetter('xa', *split_affine(i, j, u)),
            GeneratorLetter('xa', *split_affine(j, i, middle)),
            GeneratorLetter('xa', *split_affine(i, j, u))]


def simple_atoms(atom: GeneratorLetter, n: int) -> list[GeneratorLetter]:
    """Positive atoms stay; x_c(g) with c negative becomes W x_a(f) W^-1 with a simple."""
    root = atom.root
    if root.is_positive:
        return [atom]
    ring = atom.ring
    word, target = reduce_to_simple(root, n)
    conjugator = MonomialMatrix.identity(ring, n)
    for simple in word:
        conjugator = conjugator * simple_w(n, simple, ring.one)
    pulled = conj_by_monomial(conjugator, root, atom.payload, -1)
    if pulled.root != target:
        raise ConsistencyError(f"Conjugating {root} landed on {pulled.root}, expected {target}")
    one, minus = ring.one, -ring.one
    return ([GeneratorLetter('wa', simple, one) for simple in word]
            + [pulled.letter()]
            + [GeneratorLetter('wa', simple, minus) for simple in reversed(word)])


def simple_alphabet(word: GroupWord) -> list[GeneratorLetter]:
    atoms = []
    for letter in word.letters:
        for atom in x_atoms(letter):
            atoms.extend(simple_atoms(atom, word.n))
    logger.debug(f"Rewrote {len(word)} letters into {len(atoms)} simple-alphabet atoms")
    return atoms


# -- local coordinates --------------------------------------------------------

def _require_simple(root: AffineRoot, n: int) -> None:
    if not is_simple(root, n):
        raise DomainError(f"{root} is not a simple affine root for n={n}")


def read_coordinate(m: Matrix, root: AffineRoot) -> Scalar:
    """The x_a-component of an element of U, read off one matrix entry."""
    if root.level == 0:
        return m.entry(root.i, root.j).coefficient(0)
    # alpha_0 = (e_n - e_1, 1): entry (n,1) is t f = tau(f) t
    return m.ring.tau_pow(m.entry(root.i, root.j).coefficient(1), -1)


def local_coordinate(fac: Factorization, root: AffineRoot, side: str) -> Scalar:
    """g with v = x_a(g) z (right), or f with u = y x_a(-f) (left)."""
    _require_simple(root, fac.n)
    n, ring = fac.n, fac.ring
    w_plus = gen_w_affine(n, root, ring.one)
    w_minus = gen_w_affine(n, root, -ring.one)
    if side == RIGHT:
        g = read_coordinate(fac.v, root)
        rest = gen_x_affine(n, root, -g) * fac.v
        conjugated = w_plus * rest * w_minus
        value = g
    elif side == LEFT:
        coord = read_coordinate(fac.u, root)
        rest = fac.u * gen_x_affine(n, root, -coord)
        conjugated = w_plus * rest * w_minus
        value = -coord
    else:
        raise DomainError(f"Unknown side '{side}'")
    if not in_U(conjugated):
        raise ConsistencyError(f"Stripping x_{root} on the {side} does not leave U'_{root}")
    return value


# -- double-coset updates ------------------------------------------------------

def torus_quotient(n: int, root: AffineRoot, numerator: Scalar, denominator: Scalar) -> MonomialMatrix:
    """h_a(numerator) h_a(denominator)^-1, a degree-zero diagonal matrix."""
    inverse = gen_h(n, root.i, root.j, affine_payload(root, denominator).inverse())
    return monomial_parts(gen_h_affine(n, root, numerator) * inverse)


def _diag_entry(d: MonomialMatrix, k: int) -> LaurentPoly:
    return d.units[k - 1]


def _positive_image(w: MonomialMatrix, root: AffineRoot, coeff: Scalar, sign: int) -> ConjugationResult:
    image = conj_by_monomial(w, root, coeff, sign)
    if not image.root.is_positive:
        raise ConsistencyError(f"Expected a positive image of {root}, got {image.root}")
    return image


def _split_rank_two(m: Matrix, d: MonomialMatrix, upper: AffineRoot, side: str):
    """Solve m = x_a(A) d x_-a(K) (left) or m = x_-a(K) d x_a(C) (right) in the (i,j) block."""
    n = m.n
    i, j = upper.i, upper.j
    if side == LEFT:
        dj_inv = _diag_entry(d, j).inverse()
        a_payload = m.entry(i, j) * dj_inv
        k_payload = dj_inv * m.entry(j, i)
        rebuilt = gen_x(n, i, j, a_payload) * d.to_matrix() * gen_x(n, j, i, k_payload)
        first, second = (i, j, a_payload), (j, i, k_payload)
    else:
        di_inv = _diag_entry(d, i).inverse()
        c_payload = di_inv * m.entry(i, j)
        k_payload = m.entry(j, i) * di_inv
        rebuilt = gen_x(n, j, i, k_payload) * d.to_matrix() * gen_x(n, i, j, c_payload)
        first, second = (i, j, c_payload), (j, i, k_payload)
    if rebuilt != m:
        raise ConsistencyError(f"Rank-two splitting failed for {upper} on the {side}")
    same_root, same_coeff = split_affine(*first)
    opposite_root, opposite_coeff = split_affine(*second)
    if same_root != upper or opposite_root != -upper:
        raise ConsistencyError(f"Rank-two splitting left the root subgroups of {upper}")
    return same_coeff, opposite_coeff


def rho_step_detail(fac: Factorization, root: AffineRoot, side: str) -> StepResult:
    """Factorization of w_a(1) e (left) or e w_b(-1) (right), with its branch."""
    coordinate = local_coordinate(fac, root, side)
    n, ring = fac.n, fac.ring
    one = ring.one
    w_plus = gen_w_affine(n, root, one)
    w_minus = gen_w_affine(n, root, -one)
    if side == LEFT:
        f = coordinate
        y = fac.u * gen_x_affine(n, root, f)
        y_conj = w_plus * y * w_minus
        image = conj_by_monomial(fac.w, root, -f, -1)
        if f.is_zero() or image.root.is_positive:
            result = Factorization(y_conj, simple_w(n, root, one) * fac.w, image.matrix(n) * fac.v)
            branch = REGULAR
        else:
            d = torus_quotient(n, root, one, f)
            a_coeff, k_coeff = _split_rank_two(w_plus * gen_x_affine(n, root, -f), d, root, LEFT)
            k2 = _positive_image(fac.w, -root, k_coeff, -1)
            result = Factorization(y_conj * gen_x_affine(n, root, a_coeff), d * fac.w,
                                   k2.matrix(n) * fac.v)
            branch = FOLDED
    else:
        g = coordinate
        z = gen_x_affine(n, root, -g) * fac.v
        z_conj = w_plus * z * w_minus
        image = conj_by_monomial(fac.w, root, g, 1)
        if g.is_zero() or image.root.is_positive:
            result = Factorization(fac.u * image.matrix(n), fac.w * simple_w(n, root, -one), z_conj)
            branch = REGULAR
        else:
            d = torus_quotient(n, root, g, one)
            c_coeff, k_coeff = _split_rank_two(gen_x_affine(n, root, g) * w_minus, d, root, RIGHT)
            k4 = _positive_image(fac.w, -root, k_coeff, 1)
            result = Factorization(fac.u * k4.matrix(n), fac.w * d,
                                   gen_x_affine(n, root, c_coeff) * z_conj)
            branch = FOLDED
    if not (in_U(result.u) and in_U(result.v)):
        raise ConsistencyError(f"Step {side} by {root} left U")
    logger.debug(f"rho_step {side} {root}: branch {branch}, coordinate {coordinate}")
    return StepResult(result, branch, coordinate)


def rho_step(fac: Factorization, root: AffineRoot, side: str) -> Factorization:
    return rho_step_detail(fac, root, side).factorization


def multiply_torus(fac: Factorization, torus: MonomialMatrix, side: str) -> Factorization:
    """Absorb a degree-zero diagonal t on the given side: t u w v = (t u t^-1)(t w) v."""
    if not torus.is_diagonal or any(c.max_exponent != 0 for c in torus.units):
        raise DomainError("Only degree-zero diagonal matrices can be absorbed")
    t, t_inv = torus.to_matrix(), torus.inverse().to_matrix()
    if side == LEFT:
        return Factorization(t * fac.u * t_inv, torus * fac.w, fac.v)
    return Factorization(fac.u, fac.w * torus, t_inv * fac.v * t)


# -- absorption ---------------------------------------------------------------

def absorb_right(fac: Factorization, atom: GeneratorLetter) -> Factorization:
    n = fac.n
    if atom.kind == 'xa':
        if not atom.root.is_positive:
            raise DomainError(f"Only positive atoms are absorbed directly, got {atom}")
        return Factorization(fac.u, fac.w, fac.v * atom.matrix(n))
    stepped = rho_step(fac, atom.root, RIGHT)
    if atom.payload.is_one():
        # w_b(1) = w_b(-1) h_beta(-1)
        return multiply_torus(stepped, minus_one_block(fac.ring, n, atom.root), RIGHT)
    return stepped


def absorb_left(atom: GeneratorLetter, fac: Factorization) -> Factorization:
    n = fac.n
    if atom.kind == 'xa':
        if not atom.root.is_positive:
            raise DomainError(f"Only positive atoms are absorbed directly, got {atom}")
        return Factorization(atom.matrix(n) * fac.u, fac.w, fac.v)
    stepped = rho_step(fac, atom.root, LEFT)
    if atom.payload.is_one():
        return stepped
    # w_a(-1) = h_beta(-1) w_a(1)
    return multiply_torus(stepped, minus_one_block(fac.ring, n, atom.root), LEFT)


def factorize(word: GroupWord, order: str = RIGHT) -> Factorization:
    """u w v for the product of ``word``, absorbing letters left-to-right or right-to-left."""
    atoms = simple_alphabet(word)
    fac = Factorization.identity(word.ring, word.n)
    if order == RIGHT:
        for atom in atoms:
            fac = absorb_right(fac, atom)
    elif order == LEFT:
        for atom in reversed(atoms):
            fac = absorb_left(atom, fac)
    else:
        raise DomainError(f"Unknown absorption order '{order}'")
    if fac.matrix() != word.matrix():
        raise ConsistencyError(f"Factorization of {word} does not reproduce its matrix")
    return fac


def rho(word: GroupWord) -> MonomialMatrix:
    return factorize(word).w
