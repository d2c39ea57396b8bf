"""
Square matrices over D_tau and monomial matrices P_sigma diag(u_1, ..., u_n).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ring.exceptions import DomainError
from ring.laurent import LaurentPoly
from ring.scalars import DivisionRing
from roots.weyl import Permutation, compose, identity, invert


@dataclass(frozen=True)
class Matrix:
    ring: DivisionRing = field(repr=False, compare=False, hash=False)
    rows: tuple[tuple[LaurentPoly, ...], ...] = ()

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'Matrix':
        zero, one = LaurentPoly.zero(ring), LaurentPoly.one(ring)
        return cls(ring, tuple(tuple(one if r == c else zero for c in range(n)) for r in range(n)))

    @classmethod
    def from_entries(cls, ring: DivisionRing, n: int,
                     entries: dict[tuple[int, int], LaurentPoly]) -> 'Matrix':
        """Identity with the given 1-based entries overwritten."""
        base = [list(row) for row in cls.identity(ring, n).rows]
        for (r, c), value in entries.items():
            base[r - 1][c - 1] = value
        return cls(ring, tuple(tuple(row) for row in base))

    def entry(self, r: int, c: int) -> LaurentPoly:
        return self.rows[r - 1][c - 1]

    def __mul__(self, other: 'Matrix') -> 'Matrix':
        n = self.n
        zero = LaurentPoly.zero(self.ring)
        out = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = zero
                for k in range(n):
                    a = self.rows[r][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][c]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.ring, tuple(out))

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.ring, self.n)

    def is_diagonal(self) -> bool:
        return all(self.rows[r][c].is_zero() for r in range(self.n) for c in range(self.n) if r != c)

    def diagonal(self) -> list[LaurentPoly]:
        return [self.rows[r][r] for r in range(self.n)]

    def __str__(self) -> str:
        return '[' + '; '.join(', '.join(str(e) for e in row) for row in self.rows) + ']'


@dataclass(frozen=True)
class MonomialMatrix:
    """P_sigma diag(u_1, ..., u_n): the entry at (sigma(i), i) is u_i."""

    sigma: Permutation
    units: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if any(not u.is_unit() for u in self.units):
            raise DomainError("Monomial matrices need unit entries")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def ring(self) -> DivisionRing:
        return self.units[0].ring

    @classmethod
    def identity(cls, ring: DivisionRing, n: int) -> 'MonomialMatrix':
        return cls(identity(n), (LaurentPoly.one(ring),) * n)

    @classmethod
    def diagonal(cls, units: list[LaurentPoly]) -> 'MonomialMatrix':
        return cls(identity(len(units)), tuple(units))

    def to_matrix(self) -> Matrix:
        ring = self.ring
        zero = LaurentPoly.zero(ring)
        rows = [[zero] * self.n for _ in range(self.n)]
        for i, u in enumerate(self.units, start=1):
            rows[self.sigma[i - 1] - 1][i - 1] = u
        return Matrix(ring, tuple(tuple(row) for row in rows))

    def __mul__(self, other: 'MonomialMatrix') -> 'MonomialMatrix':
        pi = other.sigma
        units = tuple(self.units[pi[i] - 1] * other.units[i] for i in range(self.n))
        return MonomialMatrix(compose(self.sigma, pi), units)

    def inverse(self) -> 'MonomialMatrix':
        inv = invert(self.sigma)
        return MonomialMatrix(inv, tuple(self.units[inv[j] - 1].inverse() for j in range(self.n)))

    @property
    def is_diagonal(self) -> bool:
        return self.sigma == identity(self.n)

    def entry_at_row(self, r: int) -> LaurentPoly:
        """The nonzero entry of row r, i.e. u_{sigma^-1(r)}."""
        return self.units[invert(self.sigma)[r - 1] - 1]

    def degree_gap(self) -> int:
        """d_w = deg(u_1^-1 u_2) for n = 2."""
        return self.units[1].max_exponent - self.units[0].max_exponent

    def __str__(self) -> str:
        return f"sigma={list(self.sigma)}; units=({', '.join(str(u) for u in self.units)})"


def monomial_parts(m: Matrix) -> MonomialMatrix:
    """Extract (sigma, u_1..u_n) from a monomial matrix."""
    n = m.n
    sigma = []
    units = []
    for c in range(1, n + 1):
        nonzero = [r for r in range(1, n + 1) if not m.entry(r, c).is_zero()]
        if len(nonzero) != 1 or not m.entry(nonzero[0], c).is_unit():
            raise DomainError(f"Column {c} of {m} is not monomial")
        sigma.append(nonzero[0])
        units.append(m.entry(nonzero[0], c))
    if sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"{m} is not a monomial matrix")
    return MonomialMatrix(tuple(sigma), tuple(units))
