"""Integral solvability of Aᵀx = b."""

from functools import reduce
from itertools import combinations
from math import gcd
from typing import Optional, Sequence, Tuple

from symtope.services.linalg.elimination import integer_determinant
from symtope.services.linalg.matrix import IntegerMatrix
from symtope.services.linalg.smith import SNFResult, smith_normal_form


def solve_integral_system(
    A: IntegerMatrix, b: Sequence[int], snf_t: Optional[SNFResult] = None
) -> Optional[Tuple[int, ...]]:
    """
    Integral solution of Aᵀx = b, or None.

    With Aᵀ = S·D·T the system becomes D·y = S⁻¹b, y = T·x: y_i =
    (S⁻¹b)_i / α_i must be integral for i < r and (S⁻¹b)_i must vanish beyond
    the rank.

    Args:
        A: matrix whose columns index the equations (x lives in Z^{n_rows})
        b: right-hand side, one entry per column of A
        snf_t: precomputed Smith form of Aᵀ

    Returns:
        A solution verified by multiplication, or None when none exists.
    """
    At = A.transpose()
    if len(b) != At.n_rows:
        raise ValueError("right-hand side length must equal the column count of A")
    snf = snf_t or smith_normal_form(At)
    c = snf.S_inv.apply(list(b))
    y = [0] * At.n_cols
    for i, alpha in enumerate(snf.divisors):
        if c[i] % alpha:
            return None
        y[i] = c[i] // alpha
    if any(c[i] for i in range(snf.rank, At.n_rows)):
        return None
    x = snf.T_inv.apply(y)
    if tuple(At.apply(x)) != tuple(b):
        raise ArithmeticError("Smith transform verification failed")
    return tuple(x)


def gcd_minor_criterion(A: IntegerMatrix, b: Sequence[int]) -> bool:
    """
    Integrality criterion for full-column-rank A: Aᵀx = b is solvable over Z iff
    the gcd of the maximal minors of Aᵀ divides every maximal minor of [Aᵀ | b].
    Brute force; meant as an oracle at small sizes.
    """
    At = A.transpose()
    s, n = At.shape
    rows = At.rows()
    aug = [row + [bi] for row, bi in zip(rows, b)]

    def minors(mat, width):
        for cols in combinations(range(width), s):
            yield integer_determinant([[mat[i][j] for j in cols] for i in range(s)])

    g = reduce(gcd, minors(rows, n), 0)
    if g == 0:
        raise ValueError("A must have full column rank")
    return all(m % g == 0 for m in minors(aug, n + 1))
