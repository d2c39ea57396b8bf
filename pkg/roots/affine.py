"""
Finite roots eps_i - eps_j of type A_{n-1}, affine roots (beta, m), the
Cartan pairing and affine reflections.

Roots are stored by index pair; nothing here needs coordinates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from ring.exceptions import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class FiniteRoot:
    """beta = eps_i - eps_j."""
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise DomainError(f"eps_{self.i} - eps_{self.j} is not a root")

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    @property
    def height(self) -> int:
        return self.j - self.i

    def __neg__(self) -> 'FiniteRoot':
        return FiniteRoot(self.j, self.i)

    def reflect(self, gamma: 'FiniteRoot') -> 'FiniteRoot':
        """sigma_beta(gamma): swap the indices i and j inside gamma."""
        swap = {self.i: self.j, self.j: self.i}
        return FiniteRoot(swap.get(gamma.i, gamma.i), swap.get(gamma.j, gamma.j))

    def permuted(self, sigma: tuple[int, ...]) -> 'FiniteRoot':
        """The root eps_sigma(i) - eps_sigma(j)."""
        return FiniteRoot(sigma[self.i - 1], sigma[self.j - 1])

    def __str__(self) -> str:
        return f'e{self.i}-e{self.j}'


def pairing(gamma: FiniteRoot, beta: FiniteRoot) -> int:
    """<gamma, beta> = 2(gamma, beta)/(beta, beta) for type A."""
    k, l = gamma.i, gamma.j
    i, j = beta.i, beta.j
    return (k == i) - (k == j) - (l == i) + (l == j)


@dataclass(frozen=True, order=True)
class AffineRoot:
    """beta-dot = (beta, m)."""
    root: FiniteRoot
    level: int

    @classmethod
    def of(cls, i: int, j: int, m: int) -> 'AffineRoot':
        return cls(FiniteRoot(i, j), m)

    @property
    def i(self) -> int:
        return self.root.i

    @property
    def j(self) -> int:
        return self.root.j

    @property
    def is_positive(self) -> bool:
        if self.root.is_positive:
            return self.level >= 0
        return self.level > 0

    def height(self, n: int) -> int:
        return self.level * n + self.root.height

    def __neg__(self) -> 'AffineRoot':
        return AffineRoot(-self.root, -self.level)

    def __str__(self) -> str:
        return f'a[{self.i},{self.j},{self.level}]'


def affine_reflect(beta: AffineRoot, gamma: AffineRoot) -> AffineRoot:
    """sigma_beta(gamma) = (sigma_beta(gamma'), n - <gamma', beta'> m)."""
    return AffineRoot(beta.root.reflect(gamma.root),
                      gamma.level - pairing(gamma.root, beta.root) * beta.level)


def highest_root(n: int) -> FiniteRoot:
    return FiniteRoot(1, n)


def simple_roots(n: int) -> list[AffineRoot]:
    """[alpha_0, alpha_1, ..., alpha_{n-1}] with alpha_0 = (-theta, 1)."""
    if n < 2:
        raise DomainError(f"Type A_{n - 1} needs n >= 2, got {n}")
    return [AffineRoot(-highest_root(n), 1)] + [AffineRoot.of(i, i + 1, 0) for i in range(1, n)]


def is_simple(root: AffineRoot, n: int) -> bool:
    return root in simple_roots(n)


def apply_reflections(word: list[AffineRoot], root: AffineRoot) -> AffineRoot:
    """sigma_{a_1} o ... o sigma_{a_r} applied to ``root``."""
    for simple in reversed(word):
        root = affine_reflect(simple, root)
    return root


def reduce_to_simple(root: AffineRoot, n: int) -> tuple[list[AffineRoot], AffineRoot]:
    """A word a_1..a_r of simple roots and a simple a with sigma_{a_1}..sigma_{a_r}(a) = root."""
    if not root.is_positive:
        word, target = reduce_to_simple(-root, n)
        # -gamma = sigma_word(-a) = sigma_word(sigma_a(a))
        return word + [target], target
    simples = simple_roots(n)
    word: list[AffineRoot] = []
    current = root
    while current not in simples:
        for simple in simples:
            if pairing(current.root, simple.root) > 0:
                word.append(simple)
                current = affine_reflect(simple, current)
                break
        else:
            raise DomainError(f"No descending simple reflection for {current}")
    logger.debug(f"Reduced {root} to {current} via {len(word)} reflections")
    return word, current


def affine_roots(n: int, level_bound: int) -> Iterator[AffineRoot]:
    """Every affine root with |m| <= level_bound, in sorted order."""
    for m in range(-level_bound, level_bound + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield AffineRoot.of(i, j, m)
