"""
Integer matrices.

Entries are Python ints (arbitrary precision) stored row-major in an immutable
tuple, so matrices can be shared freely and used as cache keys.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from symtope.utils.common import Rational

Row = Tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix with arbitrary-precision entries."""

    n_rows: int
    n_cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} entries, got {len(self.entries)}"
            )

    # construction

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], n_cols: Optional[int] = None
    ) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), n_cols, tuple(x for row in rows for x in row))

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], n_rows: Optional[int] = None
    ) -> "IntegerMatrix":
        columns = [tuple(int(x) for x in col) for col in columns]
        if n_rows is None:
            n_rows = len(columns[0]) if columns else 0
        return cls.from_rows(
            [[col[i] for col in columns] for i in range(n_rows)], n_cols=len(columns)
        )

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "IntegerMatrix":
        return cls(n_rows, n_cols, (0,) * (n_rows * n_cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_dump(cls, dump: Dict) -> "IntegerMatrix":
        data = tuple(int(x) for x in dump["data"])
        return cls(int(dump["rows"]), int(dump["cols"]), data)

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> Row:
        return self.entries[i * self.n_cols : (i + 1) * self.n_cols]

    def column(self, j: int) -> Row:
        return self.entries[j :: self.n_cols] if self.n_cols else ()

    def rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.n_rows)]

    def columns(self) -> List[Row]:
        return [self.column(j) for j in range(self.n_cols)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def max_abs(self) -> int:
        return max((abs(x) for x in self.entries), default=0)

    # algebra

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(self.columns(), self.n_rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntegerMatrix.from_rows(
            [
                [sum(a * b for a, b in zip(self.row(i), c)) for c in cols]
                for i in range(self.n_rows)
            ],
            other.n_cols,
        )

    def apply(self, vector: Sequence[Rational]) -> Tuple[Rational, ...]:
        """Matrix-vector product; works for int and Fraction vectors alike."""
        if len(vector) != self.n_cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(a * x for a, x in zip(self.row(i), vector) if a)
            for i in range(self.n_rows)
        )

    def apply_transpose(self, vector: Sequence[Rational]) -> Tuple[Rational, ...]:
        if len(vector) != self.n_rows:
            raise ValueError("vector length does not match row count")
        return tuple(
            sum(a * x for a, x in zip(self.column(j), vector) if a)
            for j in range(self.n_cols)
        )

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntegerMatrix":
        rows, cols = list(rows), list(cols)
        return IntegerMatrix.from_rows(
            [[self[i, j] for j in cols] for i in rows], len(cols)
        )

    def select_columns(self, cols: Iterable[int]) -> "IntegerMatrix":
        return self.submatrix(range(self.n_rows), cols)

    def select_rows(self, rows: Iterable[int]) -> "IntegerMatrix":
        return self.submatrix(rows, range(self.n_cols))

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.n_rows != other.n_rows:
            raise ValueError("row count mismatch")
        return IntegerMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.n_rows)],
            self.n_cols + other.n_cols,
        )

    def negate(self) -> "IntegerMatrix":
        return IntegerMatrix(self.n_rows, self.n_cols, tuple(-x for x in self.entries))

    # serialization

    def to_dump(self) -> Dict:
        return {"rows": self.n_rows, "cols": self.n_cols, "data": list(self.entries)}


def rational_matvec(
    rows: Sequence[Sequence[Rational]], vector: Sequence[Rational]
) -> List[Fraction]:
    return [
        sum((Fraction(a) * b for a, b in zip(row, vector)), Fraction(0)) for row in rows
    ]
