"""
Exact elimination kernels: fraction-free determinants and ranks over the
integers, reduced row echelon forms over the rationals.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from symtope.utils.common import Rational, primitive


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free echelon elimination."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((i for i in range(rank, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        row_r = m[rank]
        for i in range(rank + 1, n_rows):
            row_i = m[i]
            lead = row_i[c]
            for j in range(c + 1, n_cols):
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
    return rank


def column_rank(columns: Sequence[Sequence[int]]) -> int:
    """Rank of the matrix whose columns are given."""
    if not columns:
        return 0
    return integer_rank(columns)


def rref(rows: Sequence[Sequence[Rational]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rational_nullspace(
    rows: Sequence[Sequence[Rational]], n_cols: int
) -> List[List[Fraction]]:
    """Basis of {x : M x = 0} over Q, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    reduced, pivots = rref(rows)
    free = [j for j in range(n_cols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(vec)
    return basis


def primitive_nullspace(
    rows: Sequence[Sequence[Rational]], n_cols: int
) -> List[Tuple[int, ...]]:
    return [primitive(v) for v in rational_nullspace(rows, n_cols)]


def solve_rational(
    rows: Sequence[Sequence[Rational]], rhs: Sequence[Rational]
) -> Optional[List[Fraction]]:
    """One solution of M x = b over Q (free variables set to zero), or None."""
    n_cols = len(rows[0]) if rows else 0
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r][n_cols]
    return x


def invert_rational(rows: Sequence[Sequence[Rational]]) -> List[List[Fraction]]:
    n = len(rows)
    augmented = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in reduced]


def independent_rows(rows: Sequence[Sequence[int]]) -> List[int]:
    """Greedy indices of a maximal linearly independent set of rows."""
    chosen: List[int] = []
    basis: List[Sequence[int]] = []
    for i, row in enumerate(rows):
        if not any(row):
            continue
        if integer_rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen


def affine_rank(points: Sequence[Sequence[Rational]]) -> int:
    """Dimension of the affine hull of a point set (-1 when empty)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    _, pivots = rref(diffs)
    return len(pivots)
