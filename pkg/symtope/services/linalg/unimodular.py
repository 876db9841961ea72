"""
Total unimodularity by exhaustive minor enumeration.

Minors are visited by increasing size. A square submatrix with a row or column
holding at most one nonzero has determinant 0 or ± a smaller minor that was
already checked, so only submatrices with at least two nonzeros in every row
and column are evaluated. The first failure is therefore a witness of minimal
size.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import check_guard
from symtope.services.linalg.elimination import integer_determinant
from symtope.services.linalg.matrix import IntegerMatrix

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class TUResult:
    unimodular: bool
    witness_rows: Optional[Tuple[int, ...]] = None
    witness_cols: Optional[Tuple[int, ...]] = None
    determinant: Optional[int] = None
    minors_evaluated: int = 0

    @property
    def witness_size(self) -> int:
        return len(self.witness_rows) if self.witness_rows else 0


def predicted_minors(n_rows: int, n_cols: int) -> int:
    """Number of nonempty square submatrices: C(n + m, n) - 1."""
    return comb(n_rows + n_cols, n_cols) - 1


def is_totally_unimodular(
    A: IntegerMatrix, settings: Optional[Settings] = None
) -> TUResult:
    settings = resolve(settings)
    check_guard("max_minors", predicted_minors(*A.shape), settings.MAX_MINORS)

    for i in range(A.n_rows):
        for j in range(A.n_cols):
            if A[i, j] not in (-1, 0, 1):
                return TUResult(False, (i,), (j,), A[i, j], 0)

    # enumerate subsets of the shorter side
    transposed = A.n_cols > A.n_rows
    M = A.transpose() if transposed else A
    rows = M.rows()
    support = [
        frozenset(i for i in range(M.n_rows) if rows[i][j]) for j in range(M.n_cols)
    ]
    evaluated = 0

    for k in range(2, M.n_cols + 1):
        for cols in combinations(range(M.n_cols), k):
            candidates = [
                i for i in range(M.n_rows) if sum(1 for j in cols if rows[i][j]) >= 2
            ]
            if len(candidates) < k:
                continue
            cand_set = set(candidates)
            if any(len(support[j] & cand_set) < 2 for j in cols):
                continue
            for sub_rows in combinations(candidates, k):
                if any(sum(1 for i in sub_rows if rows[i][j]) < 2 for j in cols):
                    continue
                minor = [[rows[i][j] for j in cols] for i in sub_rows]
                det = integer_determinant(minor)
                evaluated += 1
                if det not in (-1, 0, 1):
                    wr, wc = (cols, sub_rows) if transposed else (sub_rows, cols)
                    logger.info("tu_witness", size=k, determinant=det)
                    return TUResult(False, tuple(wr), tuple(wc), det, evaluated)

    logger.debug("tu_verified", shape=A.shape, evaluated=evaluated)
    return TUResult(True, minors_evaluated=evaluated)
