"""
Lattice coordinates on the linear span of a generator matrix.

The saturated lattice L = im_R(A) ∩ Z^m gets a basis normalised by a column
Hermite form on an independent row set I, so coordinates of a lattice point x
are recovered from x_I alone by forward substitution.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from symtope.services.linalg import (
    IntegerMatrix,
    SNFResult,
    hermite_normal_form,
    saturation_basis,
    smith_normal_form,
)
from symtope.services.linalg.elimination import independent_rows
from symtope.utils.common import Rational


@dataclass(frozen=True)
class LatticeCoordinates:
    basis: Tuple[Tuple[int, ...], ...]
    rows: Tuple[int, ...]
    hermite: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def to_coords(self, x: Sequence[Rational]) -> Tuple[Fraction, ...]:
        """Coordinates u with basis·u = x; x must lie in the span."""
        H = self.hermite
        u: List[Fraction] = []
        for i, row_index in enumerate(self.rows):
            acc = Fraction(x[row_index]) - sum(H[i][j] * u[j] for j in range(i))
            u.append(acc / H[i][i])
        return tuple(u)

    def from_coords(self, u: Sequence[Rational]) -> Tuple[Rational, ...]:
        m = self.ambient_dim
        return tuple(sum(b[i] * c for b, c in zip(self.basis, u)) for i in range(m))

    def in_span(self, x: Sequence[Rational]) -> bool:
        back = self.from_coords(self.to_coords(x))
        return tuple(Fraction(v) for v in back) == tuple(Fraction(v) for v in x)

    def gram(self) -> List[List[int]]:
        return [
            [sum(a * b for a, b in zip(bi, bj)) for bj in self.basis]
            for bi in self.basis
        ]


def lattice_coordinates(
    A: IntegerMatrix, snf: Optional[SNFResult] = None
) -> LatticeCoordinates:
    snf = snf or smith_normal_form(A)
    saturated = saturation_basis(A, snf)
    r = len(saturated)
    if r == 0:
        return LatticeCoordinates((), (), ())
    m = A.n_rows
    B = [[saturated[j][i] for j in range(r)] for i in range(m)]
    chosen = independent_rows(B)
    H, U = hermite_normal_form([B[i] for i in chosen])
    # basis columns B·U
    basis = tuple(
        tuple(sum(B[i][k] * U[k][j] for k in range(r)) for i in range(m))
        for j in range(r)
    )
    return LatticeCoordinates(basis, tuple(chosen), tuple(tuple(row) for row in H))
