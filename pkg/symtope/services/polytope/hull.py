"""
Exact facet enumeration.

Crosspolytopes get their 2^r sign facets in closed form; everything else goes
through cddlib's exact (GMP rational) double description in lattice
coordinates, followed by a tight-set check of every returned inequality.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

import cdd
import cdd.gmp
import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import check_guard
from symtope.services.linalg import IntegerMatrix, integer_rank, solve_integral_system
from symtope.services.linalg.elimination import affine_rank, invert_rational
from symtope.services.polytope.polytope import CSPolytope, is_crosspolytope
from symtope.utils.common import primitive

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Facet:
    """
    Facet {x : w·x = 1} of a centrally symmetric polytope.

    ``normal`` is the ambient normal inside the linear span of P, ``coords`` the
    same functional in lattice coordinates and ``vertex_indices`` the signed
    1-based column indices lying on the facet.
    """

    normal: Tuple[Fraction, ...]
    coords: Tuple[Fraction, ...]
    vertex_indices: Tuple[int, ...]

    def negated(self) -> "Facet":
        return Facet(
            tuple(-x for x in self.normal),
            tuple(-x for x in self.coords),
            tuple(sorted(-i for i in self.vertex_indices)),
        )


@dataclass(frozen=True)
class PolarVertex:
    vector: Tuple[Fraction, ...]
    integral: bool
    lift: Optional[Tuple[int, ...]]


def _ambient_normal(
    polytope: CSPolytope, coords: Sequence[Fraction]
) -> Tuple[Fraction, ...]:
    """w = B·G⁻¹·w_u, the unique functional in span(B) agreeing with w_u."""
    cache = polytope._cache
    if "gram_inv" not in cache:
        gram = polytope.lattice.gram()
        cache["gram_inv"] = invert_rational(gram) if polytope.rank else []
    g_inv = cache["gram_inv"]
    r = polytope.rank
    y = [sum(g_inv[i][j] * coords[j] for j in range(r)) for i in range(r)]
    basis = polytope.lattice.basis
    return tuple(
        sum(basis[j][i] * y[j] for j in range(r)) for i in range(polytope.ambient_dim)
    )


def _make_facet(polytope: CSPolytope, coords: Tuple[Fraction, ...]) -> Facet:
    tight = []
    for j, u in enumerate(polytope.column_coords, start=1):
        value = sum(c * x for c, x in zip(coords, u))
        if value == 1:
            tight.append(j)
        elif value == -1:
            tight.append(-j)
    return Facet(_ambient_normal(polytope, coords), coords, tuple(sorted(tight)))


def _check_hull_guards(polytope: CSPolytope, settings: Settings) -> None:
    check_guard("max_hull_dim", polytope.rank, settings.MAX_HULL_DIM)
    check_guard("max_hull_vertices", polytope.n_columns, settings.MAX_HULL_VERTICES)


def crosspolytope_polar_rows(polytope: CSPolytope) -> List[List[Fraction]]:
    """
    Rows of (Uᵀ)⁻¹, U the lattice coordinates of the columns; the sign facet b
    has w_u = (Uᵀ)⁻¹·b.
    """
    if not is_crosspolytope(polytope):
        raise ValueError("sign facets exist only for crosspolytopes")
    cache = polytope._cache
    if "coords_inv_t" not in cache:
        coords = [list(u) for u in polytope.column_coords]
        cache["coords_inv_t"] = invert_rational(coords)
    return cache["coords_inv_t"]


def crosspolytope_facet(polytope: CSPolytope, signs: Sequence[int]) -> Facet:
    """Facet conv(b_i·v_i) of a crosspolytope for a sign vector b ∈ {±1}^r."""
    inv_t = crosspolytope_polar_rows(polytope)
    coords = tuple(sum(row[j] * b for j, b in enumerate(signs)) for row in inv_t)
    return _make_facet(polytope, coords)


def _cdd_normals(points: List[Tuple[int, ...]]) -> List[Tuple[Fraction, ...]]:
    rows = [[1, *p] for p in points]
    mat = cdd.gmp.matrix_from_array(rows, rep_type=cdd.RepType.GENERATOR)
    poly = cdd.gmp.polyhedron_from_matrix(mat)
    ineq = cdd.gmp.copy_inequalities(poly)
    normals = []
    for i, row in enumerate(ineq.array):
        if i in ineq.lin_set:
            continue
        b = Fraction(row[0])
        a = [Fraction(x) for x in row[1:]]
        if b <= 0 or not any(a):
            continue
        normals.append(tuple(-x / b for x in a))
    return normals


def facets_hull(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> List[Facet]:
    """
    Complete irredundant facet list with normals scaled to offset 1.

    Raises GuardExceededError above the hull dimension / vertex guards.
    """
    if "facets" in polytope._cache:
        return polytope._cache["facets"]
    settings = resolve(settings)
    _check_hull_guards(polytope, settings)
    r = polytope.rank
    if is_crosspolytope(polytope):
        check_guard("max_points", 2**r, settings.MAX_POINTS)
        facets = [crosspolytope_facet(polytope, b) for b in product((1, -1), repeat=r)]
        route = "crosspolytope"
    else:
        columns = polytope.column_coords
        points = list(columns) + [tuple(-x for x in u) for u in columns]
        seen = set()
        facets = []
        for coords in _cdd_normals(points):
            if coords in seen:
                continue
            seen.add(coords)
            facet = _make_facet(polytope, coords)
            values = [sum(c * x for c, x in zip(coords, u)) for u in columns]
            if any(abs(v) > 1 for v in values):
                raise ArithmeticError("hull inequality violated by a generator")
            tight_points = [polytope.signed_coords(i) for i in facet.vertex_indices]
            if affine_rank(tight_points) != r - 1:
                continue
            facets.append(facet)
        route = "cdd"
    facets.sort(key=lambda f: f.vertex_indices)
    logger.info(
        "facets_hull", polytope=polytope.name, dim=r, route=route, facets=len(facets)
    )
    polytope._cache["facets"] = facets
    return facets


def vertex_mask(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> Tuple[bool, ...]:
    """Which reduced columns are vertices of P (their negatives follow by symmetry)."""
    if is_crosspolytope(polytope) or polytope.all_columns_certified:
        return (True,) * polytope.n_columns
    facets = facets_hull(polytope, settings)
    mask = []
    for j in range(1, polytope.n_columns + 1):
        normals = [primitive(f.coords) for f in facets if j in f.vertex_indices]
        mask.append(bool(normals) and integer_rank(normals) == polytope.rank)
    return tuple(mask)


def vertex_count(polytope: CSPolytope, settings: Optional[Settings] = None) -> int:
    return 2 * sum(vertex_mask(polytope, settings))


def polar_vertex(polytope: CSPolytope, facet: Facet) -> PolarVertex:
    """
    Vertex of the polar dual dual to ``facet``. It is integral with respect to
    the dual of the lattice aff(P) ∩ Z^m exactly when the coordinate functional
    is integral; ``lift`` is then an integral solution of A_Fᵀx = ±1.
    """
    integral = all(x.denominator == 1 for x in facet.coords)
    lift = None
    if integral:
        columns = [polytope.signed_column(i) for i in facet.vertex_indices]
        A_F = IntegerMatrix.from_columns(columns, polytope.ambient_dim)
        lift = solve_integral_system(A_F, [1] * len(columns))
        if lift is None:
            raise ArithmeticError("integral polar vertex without an integral lift")
    return PolarVertex(facet.normal, integral, lift)
