"""
Centrally symmetric lattice polytopes conv[A | -A].

A polytope remembers the matrix it was built from; ``column_map`` sends each
source column to the signed 1-based index of its reduced column (0 for a zero
column), so labelings can be read back on the source indexing.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import structlog

from symtope.core.errors import DimensionError
from symtope.services.complexes import SimplicialComplex, boundary_map, classify
from symtope.services.linalg import IntegerMatrix, SNFResult, smith_normal_form
from symtope.services.polytope.lattice import LatticeCoordinates, lattice_coordinates
from symtope.utils.common import sign_normalized

logger = structlog.get_logger(__name__)

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"
MATRIX = "matrix"


@dataclass(frozen=True)
class CSPolytope:
    A: IntegerMatrix
    source: IntegerMatrix
    column_map: Tuple[int, ...]
    kind: str = MATRIX
    name: Optional[str] = None
    complex_: Optional[SimplicialComplex] = field(
        default=None, compare=False, repr=False
    )
    _cache: Dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def ambient_dim(self) -> int:
        return self.A.n_rows

    @property
    def n_columns(self) -> int:
        return self.A.n_cols

    @cached_property
    def snf(self) -> SNFResult:
        return smith_normal_form(self.A)

    @property
    def rank(self) -> int:
        return self.snf.rank

    @cached_property
    def lattice(self) -> LatticeCoordinates:
        return lattice_coordinates(self.A, self.snf)

    @cached_property
    def column_coords(self) -> Tuple[Tuple[int, ...], ...]:
        """Lattice coordinates of the columns of A (integral by construction)."""
        coords = []
        for col in self.A.columns():
            u = self.lattice.to_coords(col)
            if any(x.denominator != 1 for x in u):
                raise ArithmeticError("column outside the saturated lattice")
            coords.append(tuple(int(x) for x in u))
        return tuple(coords)

    @cached_property
    def certified_vertices(self) -> Tuple[bool, ...]:
        """
        Columns certified as vertices without a hull: {-1,0,1} columns with at
        least two nonzeros whose supports pairwise meet in at most one row.
        """
        cols = self.A.columns()
        if any(x not in (-1, 0, 1) for x in self.A.entries):
            return (False,) * len(cols)
        supports = [frozenset(i for i, x in enumerate(c) if x) for c in cols]
        certified = []
        for j, sj in enumerate(supports):
            others = (sk for k, sk in enumerate(supports) if k != j)
            certified.append(len(sj) >= 2 and all(len(sj & sk) <= 1 for sk in others))
        return tuple(certified)

    @property
    def all_columns_certified(self) -> bool:
        return all(self.certified_vertices)

    def signed_column(self, index: int) -> Tuple[int, ...]:
        """Column for a signed 1-based index (+j or -j)."""
        col = self.A.column(abs(index) - 1)
        return col if index > 0 else tuple(-x for x in col)

    def signed_coords(self, index: int) -> Tuple[int, ...]:
        u = self.column_coords[abs(index) - 1]
        return u if index > 0 else tuple(-x for x in u)


def polytope_from_matrix(
    A: IntegerMatrix,
    kind: str = MATRIX,
    name: Optional[str] = None,
    complex_: Optional[SimplicialComplex] = None,
) -> CSPolytope:
    """Reduce A (drop zero columns, merge equal and antipodal ones) and wrap it."""
    if A.n_cols == 0 or A.is_zero():
        raise DimensionError("generator matrix has no nonzero column")
    kept: List[Tuple[int, ...]] = []
    seen: Dict[Tuple[int, ...], int] = {}
    column_map = []
    for col in A.columns():
        if not any(col):
            column_map.append(0)
            continue
        key = sign_normalized(col)
        if key not in seen:
            kept.append(col)
            seen[key] = len(kept)
            column_map.append(len(kept))
        else:
            j = seen[key]
            column_map.append(j if kept[j - 1] == col else -j)
    merged = A.n_cols - len(kept)
    if merged:
        logger.debug("reduced_columns", source=A.n_cols, kept=len(kept))
    reduced = IntegerMatrix.from_columns(kept, A.n_rows)
    return CSPolytope(reduced, A, tuple(column_map), kind, name, complex_)


def _top_boundary(complex_: SimplicialComplex) -> IntegerMatrix:
    d = complex_.dim
    if d < 1:
        raise DimensionError("polytopes of 0-dimensional complexes are not defined")
    if not complex_.is_pure:
        logger.warning(
            "non_pure_complex",
            complex=complex_.name,
            dropped_facets=sum(1 for f in complex_.facets if len(f) < d + 1),
        )
    return boundary_map(complex_, d)


def homology_polytope(complex_: SimplicialComplex) -> CSPolytope:
    """P_Δ = conv[∂_d | -∂_d] on the top-dimensional facets."""
    return polytope_from_matrix(
        _top_boundary(complex_), HOMOLOGY, complex_.name, complex_
    )


def cohomology_polytope(complex_: SimplicialComplex) -> CSPolytope:
    """P^Δ = conv[∂_dᵀ | -∂_dᵀ]; repeated free-ridge columns collapse."""
    return polytope_from_matrix(
        _top_boundary(complex_).transpose(), COHOMOLOGY, complex_.name, complex_
    )


def dimension(polytope: CSPolytope) -> int:
    return polytope.rank


def affine_hull_basis(polytope: CSPolytope) -> Tuple[Tuple[int, ...], ...]:
    """Lattice basis of im_R(A) ∩ Z^m (the origin lies in the relative interior)."""
    return polytope.lattice.basis


def is_crosspolytope(polytope: CSPolytope) -> bool:
    return polytope.rank == polytope.n_columns


def expected_cohomology_vertices(complex_: SimplicialComplex) -> int:
    """2(f_{d-1} - Σ max(free(σ) - 1, 0)) for a pure complex."""
    profile = classify(complex_)
    excess = sum(max(c - 1, 0) for c in profile.free_ridge_count_per_facet)
    return 2 * (profile.f_vector[complex_.dim - 1] - excess)
