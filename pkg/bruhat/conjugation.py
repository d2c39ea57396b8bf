"""
Conjugation of affine root elements by monomial matrices.

For M = P_sigma diag(c_1, ..., c_n) one has
M x_ij(p) M^-1 = x_{sigma(i) sigma(j)}(c_i p c_j^-1), so the image of a root
element is again a root element whose level moves by deg c_i - deg c_j.
"""

from dataclasses import dataclass

from linear.generators import GeneratorLetter, affine_payload, gen_x_affine, split_affine
from linear.matrices import Matrix, MonomialMatrix
from ring.exceptions import DomainError
from ring.scalars import Scalar
from roots.affine import AffineRoot, FiniteRoot


@dataclass(frozen=True)
class ConjugationResult:
    """w^{+-1} x_b(f) w^{-+1} = x_c(g) with c = w(b)."""
    root: AffineRoot
    coeff: Scalar

    def letter(self) -> GeneratorLetter:
        return GeneratorLetter('xa', self.root, self.coeff)

    def matrix(self, n: int) -> Matrix:
        return gen_x_affine(n, self.root, self.coeff)


def conj_by_monomial(w: MonomialMatrix, root: AffineRoot, f: Scalar, sign: int = 1) -> ConjugationResult:
    if sign not in (1, -1):
        raise DomainError(f"Conjugation sign must be +1 or -1, got {sign}")
    m = w if sign == 1 else w.inverse()
    i, j = root.i, root.j
    ci, cj = m.units[i - 1], m.units[j - 1]
    target = FiniteRoot(m.sigma[i - 1], m.sigma[j - 1])
    payload = ci * affine_payload(root, f) * cj.inverse()
    if payload.is_zero():
        level = root.level + ci.max_exponent - cj.max_exponent
        return ConjugationResult(AffineRoot(target, level), f.ring.zero)
    image, coeff = split_affine(target.i, target.j, payload)
    return ConjugationResult(image, coeff)


def image_root(w: MonomialMatrix, root: AffineRoot, sign: int = 1) -> AffineRoot:
    """w(b) for sign +1, w^-1(b) for sign -1."""
    ring = w.ring
    return conj_by_monomial(w, root, ring.one, sign).root
