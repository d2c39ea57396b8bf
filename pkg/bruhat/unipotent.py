"""
Rewriting a matrix of U as a word in positive affine root elements.

Rows are reduced by a twisted Euclidean algorithm: an upper row operation may
use any multiplier in D[t], a lower one only multipliers in tD[t], so every
operation is left multiplication by a positive root element.
"""

import logging

from linear.generators import GeneratorLetter, in_U, split_affine
from linear.matrices import Matrix
from ring.exceptions import ConsistencyError, DomainError
from ring.laurent import LaurentPoly

logger = logging.getLogger(__name__)

MAX_REDUCTIONS = 10_000


def _leading(p: LaurentPoly):
    exponent, coeff = p.terms[-1]
    return exponent, coeff


class _RowReducer:
    def __init__(self, m: Matrix):
        self.ring = m.ring
        self.n = m.n
        self.rows = [list(row) for row in m.rows]
        self.operations: list[tuple[int, int, LaurentPoly]] = []

    def subtract(self, target: int, source: int, q: LaurentPoly) -> None:
        """row_target -= q * row_source, i.e. left multiply by x_{target,source}(-q)."""
        src = self.rows[source - 1]
        self.rows[target - 1] = [a - q * b for a, b in zip(self.rows[target - 1], src)]
        self.operations.append((target, source, -q))

    def entry(self, r: int, c: int) -> LaurentPoly:
        return self.rows[r - 1][c - 1]

    def quotient_term(self, a: LaurentPoly, c: LaurentPoly) -> LaurentPoly:
        """The monomial q with q*c sharing the leading term of a."""
        ea, la = _leading(a)
        ec, lc = _leading(c)
        k = ea - ec
        return LaurentPoly.monomial(self.ring, la * self.ring.tau_pow(lc, k).inverse(), k)

    def clear_below(self, p: int) -> None:
        for r in range(p + 1, self.n + 1):
            steps = 0
            while not self.entry(r, p).is_zero():
                steps += 1
                if steps > MAX_REDUCTIONS:
                    raise ConsistencyError(f"Row reduction did not terminate at ({r},{p})")
                a, c = self.entry(p, p), self.entry(r, p)
                if a.max_exponent >= c.max_exponent:
                    self.subtract(p, r, self.quotient_term(a, c))
                else:
                    self.subtract(r, p, self.quotient_term(c, a))
        if not self.entry(p, p).is_one():
            raise ConsistencyError(f"Pivot {self.entry(p, p)} at ({p},{p}) is not 1")

    def clear_above(self) -> None:
        for c in range(self.n, 1, -1):
            for p in range(1, c):
                for mono in self.entry(p, c).monomials():
                    self.subtract(p, c, mono)


def unipotent_word(m: Matrix) -> list[GeneratorLetter]:
    """Positive letters whose product is ``m``; ``m`` must lie in U."""
    if not in_U(m):
        raise DomainError(f"{m} is not in U")
    reducer = _RowReducer(m)
    for p in range(1, m.n + 1):
        reducer.clear_below(p)
    reducer.clear_above()
    # L_k ... L_1 m = I, hence m = L_1^-1 ... L_k^-1
    letters = []
    for target, source, q in reducer.operations:
        root, coeff = split_affine(target, source, -q)
        if not root.is_positive:
            raise ConsistencyError(f"Row reduction produced the negative root {root}")
        letters.append(GeneratorLetter('xa', root, coeff))
    logger.debug(f"Rewrote a U matrix as {len(letters)} positive letters")
    return letters
