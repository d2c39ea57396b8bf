"""
Index patterns between two finite roots beta = eps_i - eps_j and
gamma = eps_k - eps_l, used to pick the branch of a conjugation relation
and to sample root pairs that land in a requested branch.
"""

import random

from ring.exceptions import DomainError

from .affine import FiniteRoot

ORTHOGONAL = 'orthogonal'
SAME = 'gamma=+beta'
OPPOSITE = 'gamma=-beta'
SHARED = ('i=k', 'i=l', 'j=k', 'j=l')

CONJUGATION_BRANCHES = (ORTHOGONAL, SAME, OPPOSITE) + SHARED
COMMUTATOR_BRANCHES = ('j=k', 'i=l', 'commuting')


def branch_of(beta: FiniteRoot, gamma: FiniteRoot) -> str:
    if gamma == beta:
        return SAME
    if gamma == -beta:
        return OPPOSITE
    i, j, k, l = beta.i, beta.j, gamma.i, gamma.j
    if i == k:
        return 'i=k'
    if i == l:
        return 'i=l'
    if j == k:
        return 'j=k'
    if j == l:
        return 'j=l'
    return ORTHOGONAL


def commutator_branch(beta: FiniteRoot, gamma: FiniteRoot) -> str:
    """Branch of [x_beta, x_gamma] for gamma != +-beta."""
    if gamma in (beta, -beta):
        raise DomainError(f"No commutator formula for {beta} and {gamma}")
    if beta.j == gamma.i:
        return 'j=k'
    if beta.i == gamma.j:
        return 'i=l'
    return 'commuting'


def indices_needed(branch: str) -> int:
    if branch in (SAME, OPPOSITE):
        return 2
    if branch == ORTHOGONAL:
        return 4
    return 3


def applicable(branches: tuple[str, ...], n: int) -> list[str]:
    """The branches realizable with indices 1..n."""
    return [b for b in branches if indices_needed(b) <= n]


def sample_pair(rng: random.Random, n: int, branch: str) -> tuple[FiniteRoot, FiniteRoot]:
    """A random (beta, gamma) falling into ``branch``."""
    if branch == 'commuting':
        choices = [p for p in (ORTHOGONAL, 'i=k', 'j=l') if indices_needed(p) <= n]
        if not choices:
            raise DomainError(f"No commuting root pairs for n={n}")
        branch = rng.choice(choices)
    needed = indices_needed(branch)
    if needed > n:
        raise DomainError(f"Branch {branch} needs n >= {needed}, got n={n}")
    picks = rng.sample(range(1, n + 1), needed)
    beta = FiniteRoot(picks[0], picks[1])
    i, j = beta.i, beta.j
    if branch == SAME:
        return beta, beta
    if branch == OPPOSITE:
        return beta, -beta
    if branch == ORTHOGONAL:
        return beta, FiniteRoot(picks[2], picks[3])
    other = picks[2]
    gamma = {
        'i=k': FiniteRoot(i, other),
        'i=l': FiniteRoot(other, i),
        'j=k': FiniteRoot(j, other),
        'j=l': FiniteRoot(other, j),
    }[branch]
    return beta, gamma
