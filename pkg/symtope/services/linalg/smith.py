"""
Smith and Hermite normal forms with unimodular transforms.

Smith form: A = S·D·T with S, T unimodular. Elimination always pivots on the
entry of least absolute value; every row/column operation applied to the
working matrix is mirrored on the accumulated transforms and their inverses.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import List, Optional, Tuple

import structlog

from symtope.services.linalg.elimination import integer_determinant
from symtope.services.linalg.matrix import IntegerMatrix

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form A = S·D·T.

    ``divisors`` holds the nonzero diagonal entries α_1 | α_2 | ... | α_r; the
    remaining diagonal entries of D are zero. ``S_inv`` and ``T_inv`` are the
    inverse transforms, kept because solving and torsion extraction need them.
    """

    n_rows: int
    n_cols: int
    divisors: Tuple[int, ...]
    S: IntegerMatrix
    T: IntegerMatrix
    S_inv: IntegerMatrix
    T_inv: IntegerMatrix

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def max_divisor(self) -> int:
        return self.divisors[-1] if self.divisors else 1

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(a for a in self.divisors if a > 1)

    def diagonal(self) -> IntegerMatrix:
        rows = [[0] * self.n_cols for _ in range(self.n_rows)]
        for i, alpha in enumerate(self.divisors):
            rows[i][i] = alpha
        return IntegerMatrix.from_rows(rows, self.n_cols)

    def reconstruct(self) -> IntegerMatrix:
        return self.S @ self.diagonal() @ self.T


class _Workspace:
    """Working matrix M = U·A·V together with U, U⁻¹, V, V⁻¹."""

    def __init__(self, matrix: IntegerMatrix):
        n, m = matrix.shape
        self.n, self.m = n, m
        self.M = matrix.rows()
        self.U = IntegerMatrix.identity(n).rows()
        self.U_inv = IntegerMatrix.identity(n).rows()
        self.V = IntegerMatrix.identity(m).rows()
        self.V_inv = IntegerMatrix.identity(m).rows()

    # row operations act on M and U from the left, on U⁻¹ from the right

    def add_row(self, target: int, source: int, c: int) -> None:
        if c == 0:
            return
        for mat in (self.M, self.U):
            row_t, row_s = mat[target], mat[source]
            for k in range(len(row_t)):
                row_t[k] += c * row_s[k]
        for row in self.U_inv:
            row[source] -= c * row[target]

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.M, self.U):
            mat[i], mat[j] = mat[j], mat[i]
        for row in self.U_inv:
            row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        for mat in (self.M, self.U):
            mat[i] = [-x for x in mat[i]]
        for row in self.U_inv:
            row[i] = -row[i]

    # column operations act on M and V from the right, on V⁻¹ from the left

    def add_col(self, target: int, source: int, c: int) -> None:
        if c == 0:
            return
        for mat in (self.M, self.V):
            for row in mat:
                row[target] += c * row[source]
        row_s, row_t = self.V_inv[source], self.V_inv[target]
        for k in range(len(row_s)):
            row_s[k] -= c * row_t[k]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.M, self.V):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]

    def smallest_entry(self, t: int):
        best = None
        for i in range(t, self.n):
            row = self.M[i]
            for j in range(t, self.m):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best


def smith_normal_form(A: IntegerMatrix) -> SNFResult:
    """Exact Smith normal form with transforms; divisors normalized positive."""
    ws = _Workspace(A)
    n, m = A.shape
    t = 0
    while t < min(n, m):
        found = ws.smallest_entry(t)
        if found is None:
            break
        _, i, j = found
        ws.swap_rows(t, i)
        ws.swap_cols(t, j)
        while True:
            pivot = ws.M[t][t]
            for i in range(t + 1, n):
                ws.add_row(i, t, -(ws.M[i][t] // pivot))
            for j in range(t + 1, m):
                ws.add_col(j, t, -(ws.M[t][j] // pivot))
            leftover = [
                (abs(ws.M[i][t]), i, None) for i in range(t + 1, n) if ws.M[i][t]
            ]
            leftover += [
                (abs(ws.M[t][j]), None, j) for j in range(t + 1, m) if ws.M[t][j]
            ]
            if leftover:
                _, i, j = min(leftover, key=lambda e: e[0])
                if i is not None:
                    ws.swap_rows(t, i)
                else:
                    ws.swap_cols(t, j)
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, n)
                    if any(ws.M[i][j] % pivot for j in range(t + 1, m))
                ),
                None,
            )
            if bad is None:
                break
            ws.add_row(t, bad, 1)
        if ws.M[t][t] < 0:
            ws.negate_row(t)
        t += 1

    divisors = tuple(ws.M[i][i] for i in range(t))
    result = SNFResult(
        n_rows=n,
        n_cols=m,
        divisors=divisors,
        S=IntegerMatrix.from_rows(ws.U_inv, n),
        T=IntegerMatrix.from_rows(ws.V_inv, m),
        S_inv=IntegerMatrix.from_rows(ws.U, n),
        T_inv=IntegerMatrix.from_rows(ws.V, m),
    )
    logger.debug("snf", shape=A.shape, rank=result.rank, torsion=list(result.torsion))
    return result


def integer_kernel_basis(
    A: IntegerMatrix, snf: Optional[SNFResult] = None
) -> List[Tuple[int, ...]]:
    """Lattice basis of ker_Z(A): the trailing columns of T⁻¹."""
    snf = snf or smith_normal_form(A)
    return [snf.T_inv.column(j) for j in range(snf.rank, A.n_cols)]


def saturation_basis(
    A: IntegerMatrix, snf: Optional[SNFResult] = None
) -> List[Tuple[int, ...]]:
    """Lattice basis of im_R(A) ∩ Z^m: the leading columns of S."""
    snf = snf or smith_normal_form(A)
    return [snf.S.column(j) for j in range(snf.rank)]


def hermite_normal_form(
    rows: List[List[int]],
) -> Tuple[List[List[int]], List[List[int]]]:
    """Column-style Hermite form of a nonsingular square matrix.

    Returns (H, U) with M·U = H, U unimodular, H lower triangular with positive
    diagonal and 0 ≤ H[i][j] < H[i][i] for j < i.
    """
    n = len(rows)
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_add(target, source, c):
        for mat in (H, U):
            for row in mat:
                row[target] += c * row[source]

    def col_swap(a, b):
        for mat in (H, U):
            for row in mat:
                row[a], row[b] = row[b], row[a]

    for i in range(n):
        for j in range(i + 1, n):
            while H[i][j] != 0:
                col_add(i, j, -(H[i][i] // H[i][j]))
                col_swap(i, j)
        if H[i][i] == 0:
            raise ZeroDivisionError("matrix is singular")
        if H[i][i] < 0:
            for mat in (H, U):
                for row in mat:
                    row[i] = -row[i]
        for j in range(i):
            col_add(j, i, -(H[i][j] // H[i][i]))
    return H, U


def determinantal_divisors(A: IntegerMatrix) -> List[int]:
    """d_k(A) = gcd of all k×k minors, by brute force (small matrices only)."""
    out = []
    rows = A.rows()
    for k in range(1, min(A.shape) + 1):
        g = 0
        for r in combinations(range(A.n_rows), k):
            for c in combinations(range(A.n_cols), k):
                g = gcd(g, integer_determinant([[rows[i][j] for j in c] for i in r]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g)
    return out


def divisors_from_minors(A: IntegerMatrix) -> List[int]:
    d = determinantal_divisors(A)
    return [d[0]] + [d[i] // d[i - 1] for i in range(1, len(d))] if d else []


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)
