"""
Torsion representatives: for each elementary divisor α > 1 the rational vector
v = T⁻¹·e_i/α, whose image A·v represents an element of order α in
(im_R A ∩ Z^m) / im_Z A.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from symtope.services.linalg.matrix import IntegerMatrix
from symtope.services.linalg.smith import SNFResult, smith_normal_form
from symtope.utils.common import Rational


@dataclass(frozen=True)
class TorsionVector:
    v: Tuple[Fraction, ...]
    order: int

    def fractional_part(self) -> Tuple[Fraction, ...]:
        return tuple(x - (x.numerator // x.denominator) for x in self.v)

    def half_support(self) -> int:
        """Number of entries congruent to 1/2 modulo Z."""
        return sum(1 for x in self.fractional_part() if x == Fraction(1, 2))


def torsion_vectors(
    A: IntegerMatrix, snf: Optional[SNFResult] = None
) -> List[TorsionVector]:
    snf = snf or smith_normal_form(A)
    out = []
    for i, alpha in enumerate(snf.divisors):
        if alpha > 1:
            col = snf.T_inv.column(i)
            out.append(TorsionVector(tuple(Fraction(x, alpha) for x in col), alpha))
    return out


def parity_criterion(v: Sequence[Rational]) -> bool:
    """vᵀb ∈ Z for all b ∈ {±1}^s, decided in O(s): 2v and Σv integral."""
    halves = all((2 * Fraction(x)).denominator == 1 for x in v)
    return halves and Fraction(sum(v)).denominator == 1


def forall_sign_vectors_integral(v: Sequence[Rational]) -> bool:
    """Exhaustive version of parity_criterion over all 2^s sign vectors."""
    values = [Fraction(x) for x in v]
    for signs in product((1, -1), repeat=len(values)):
        if sum(s * x for s, x in zip(signs, values)).denominator != 1:
            return False
    return True
