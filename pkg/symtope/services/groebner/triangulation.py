"""
Regular triangulation read off the initial ideal: a set of lattice points is a
cell exactly when its squarefree monomial avoids the radical of in(I), whose
generators are the supports of the leading monomials.
"""

from dataclasses import dataclass, field
from math import prod
from typing import Dict, FrozenSet, List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError, TriangulationError
from symtope.services.groebner.basis import GroebnerBasis
from symtope.services.groebner.monomials import ToricVariable, support
from symtope.services.invariants import ehrhart_hstar
from symtope.services.linalg import integer_determinant
from symtope.services.polytope import (
    CSPolytope,
    normalized_volume,
    polytope_from_matrix,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Triangulation:
    """Cells are tuples of variable indices (0 is the origin)."""

    cells: Tuple[Tuple[int, ...], ...]
    volumes: Tuple[int, ...]
    lattice_determinant: int
    normalized_volume: int
    points: Dict[int, Tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def unimodular(self) -> bool:
        return all(v == 1 for v in self.volumes)

    @property
    def unimodular_in_spanned_lattice(self) -> bool:
        """Every cell has volume equal to the index of the column lattice."""
        return all(v == self.lattice_determinant for v in self.volumes)

    def cell_names(self) -> List[List[str]]:
        return [[ToricVariable.from_index(i).name for i in cell] for cell in self.cells]


def _minimal_supports(gb: GroebnerBasis) -> List[FrozenSet[int]]:
    supports = sorted({frozenset(support(lead)) for lead in gb.leads()}, key=len)
    minimal: List[FrozenSet[int]] = []
    for s in supports:
        if not any(m <= s for m in minimal):
            minimal.append(s)
    return minimal


def _reference_volume(polytope: CSPolytope, settings: Settings) -> int:
    try:
        return normalized_volume(polytope, settings)
    except GuardExceededError:
        if polytope.n_columns - polytope.rank > 1:
            raise
        return ehrhart_hstar(polytope, settings).normalized_volume


def triangulation_from_gb(
    gb: GroebnerBasis, settings: Optional[Settings] = None
) -> Triangulation:
    """
    Maximal cells of the triangulation induced by the emitted leads, checked
    to be full-dimensional simplices whose normalized volumes add up to the
    normalized volume of P.
    """
    settings = resolve(settings)
    polytope = polytope_from_matrix(gb.matrix)
    r = polytope.rank
    n = gb.n_vars
    points: Dict[int, Tuple[int, ...]] = {0: (0,) * r}
    for l, col in enumerate(gb.matrix.columns()):
        u = tuple(int(x) for x in polytope.lattice.to_coords(col))
        points[2 * l + 1] = u
        points[2 * l + 2] = tuple(-x for x in u)

    forbidden: Dict[int, List[FrozenSet[int]]] = {}
    for s in _minimal_supports(gb):
        forbidden.setdefault(max(s), []).append(s)

    cells: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def grow(start: int) -> None:
        if len(chosen) == r + 1:
            cells.append(tuple(chosen))
            if len(cells) > settings.MAX_CELLS:
                raise GuardExceededError("max_cells", len(cells), settings.MAX_CELLS)
            return
        for i in range(start, n - (r - len(chosen))):
            candidate = frozenset(chosen) | {i}
            if any(f <= candidate for f in forbidden.get(i, ())):
                continue
            chosen.append(i)
            grow(i + 1)
            chosen.pop()

    grow(0)

    volumes = []
    for cell in cells:
        base = points[cell[0]]
        rows = [[x - y for x, y in zip(points[i], base)] for i in cell[1:]]
        volume = abs(integer_determinant(rows)) if rows else 1
        if volume == 0:
            raise TriangulationError(f"degenerate cell {cell}")
        volumes.append(volume)
    total = sum(volumes)
    expected = _reference_volume(polytope, settings)
    if total != expected:
        raise TriangulationError(
            "cell volumes do not add up to the normalized volume",
            detail=f"cells={total} polytope={expected}",
        )
    index = prod(polytope.snf.divisors[: polytope.rank])
    logger.info(
        "triangulation_from_gb",
        cells=len(cells),
        volume=total,
        unimodular=all(v == 1 for v in volumes),
    )
    return Triangulation(tuple(cells), tuple(volumes), index, total, points)
