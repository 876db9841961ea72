"""
Lattice points of dilates and normalised volume.

Both work in lattice coordinates against the facet inequalities, so counts are
relative to aff(P) ∩ Z^m.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError
from symtope.services.linalg import integer_determinant
from symtope.services.linalg.elimination import affine_rank
from symtope.services.polytope.hull import Facet, facets_hull, vertex_mask
from symtope.services.polytope.polytope import CSPolytope
from symtope.utils.common import common_denominator

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class _Inequalities:
    normals: Tuple[Tuple[int, ...], ...]
    scales: Tuple[int, ...]


def _scaled_inequalities(facets: List[Facet]) -> _Inequalities:
    normals, scales = [], []
    for f in facets:
        den = common_denominator(f.coords)
        normals.append(tuple(int(c * den) for c in f.coords))
        scales.append(den)
    return _Inequalities(tuple(normals), tuple(scales))


def iter_lattice_points(
    polytope: CSPolytope, k: int, settings: Optional[Settings] = None
) -> Iterator[Tuple[int, ...]]:
    """
    Lattice points of kP in lattice coordinates, by depth-first search with
    coordinate bounds propagated from the facet inequalities.
    """
    settings = resolve(settings)
    r = polytope.rank
    if k == 0:
        yield (0,) * r
        return
    ineq = _scaled_inequalities(facets_hull(polytope, settings))
    bounds = [k * b for b in ineq.scales]
    coords = polytope.column_coords
    static = [k * max(abs(u[j]) for u in coords) for j in range(r)]
    n_f = len(bounds)
    # suffix_min[t][f]: smallest value Σ_{j≥t} a_fj·u_j can take inside the box
    suffix_min = [[0] * n_f for _ in range(r + 1)]
    for t in range(r - 1, -1, -1):
        for f, a in enumerate(ineq.normals):
            suffix_min[t][f] = suffix_min[t + 1][f] - abs(a[t]) * static[t]

    point = [0] * r
    partial = [0] * n_f
    found = 0

    def descend(t: int) -> Iterator[Tuple[int, ...]]:
        nonlocal found
        if t == r:
            found += 1
            if found > settings.MAX_POINTS:
                raise GuardExceededError("max_points", found, settings.MAX_POINTS)
            yield tuple(point)
            return
        lo, hi = -static[t], static[t]
        for f, a in enumerate(ineq.normals):
            c = a[t]
            # room left for a_ft·u_t with the later coordinates at their minimum
            slack = bounds[f] - partial[f] - suffix_min[t + 1][f]
            if c == 0:
                if slack < 0:
                    return
            elif c > 0:
                hi = min(hi, slack // c)
            else:
                lo = max(lo, -(slack // -c))
        if lo > hi:
            return
        for value in range(lo, hi + 1):
            point[t] = value
            for f, a in enumerate(ineq.normals):
                partial[f] += a[t] * value
            yield from descend(t + 1)
            for f, a in enumerate(ineq.normals):
                partial[f] -= a[t] * value
        point[t] = 0

    yield from descend(0)


def lattice_points(
    polytope: CSPolytope, k: int, settings: Optional[Settings] = None
) -> int:
    """|kP ∩ (aff P ∩ Z^m)|."""
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    count = sum(1 for _ in iter_lattice_points(polytope, k, settings))
    logger.debug("lattice_points", polytope=polytope.name, k=k, count=count)
    return count


def _face_facets(
    vertex_sets: List[FrozenSet[int]],
    face: FrozenSet[int],
    dim: int,
    points: Dict[int, Tuple[int, ...]],
) -> List[FrozenSet[int]]:
    """Facets of a face: maximal intersections with facets of P of dimension dim - 1."""
    out = set()
    for vs in vertex_sets:
        cut = face & vs
        if cut == face or len(cut) < dim:
            continue
        if affine_rank([points[i] for i in cut]) == dim - 1:
            out.add(frozenset(cut))
    return sorted(out, key=lambda s: sorted(s))


def pulling_triangulation(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> List[Tuple[int, ...]]:
    """
    Boundary triangulation obtained by pulling the smallest vertex of every
    face; each cell (r signed vertex indices) cones with the origin to a
    full-dimensional simplex.
    """
    facets = facets_hull(polytope, settings)
    mask = vertex_mask(polytope, settings)
    points = {}
    for j, is_vertex in enumerate(mask, start=1):
        if is_vertex:
            points[j] = polytope.signed_coords(j)
            points[-j] = polytope.signed_coords(-j)
    vertex_sets = [
        frozenset(i for i in f.vertex_indices if i in points) for f in facets
    ]
    memo: Dict[FrozenSet[int], List[Tuple[int, ...]]] = {}

    def triangulate(face: FrozenSet[int], dim: int) -> List[Tuple[int, ...]]:
        if face in memo:
            return memo[face]
        if len(face) == dim + 1:
            cells = [tuple(sorted(face, key=lambda i: (abs(i), i < 0)))]
        else:
            apex = min(face, key=lambda i: (abs(i), i < 0))
            cells = []
            for sub in _face_facets(vertex_sets, face, dim, points):
                if apex in sub:
                    continue
                cells.extend((apex,) + cell for cell in triangulate(sub, dim - 1))
        memo[face] = cells
        return cells

    r = polytope.rank
    cells: List[Tuple[int, ...]] = []
    for vs in vertex_sets:
        cells.extend(triangulate(vs, r - 1))
    return cells


def normalized_volume(polytope: CSPolytope, settings: Optional[Settings] = None) -> int:
    """r!·vol(P) in the lattice aff(P) ∩ Z^m."""
    total = 0
    for cell in pulling_triangulation(polytope, settings):
        rows = [list(polytope.signed_coords(i)) for i in cell]
        total += abs(integer_determinant(rows))
    logger.debug("normalized_volume", polytope=polytope.name, volume=total)
    return total


def interior_lattice_points(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> int:
    """Lattice points strictly inside P."""
    ineq = _scaled_inequalities(facets_hull(polytope, settings))

    def strictly_inside(u: Tuple[int, ...]) -> bool:
        return all(
            sum(a * x for a, x in zip(n, u)) < s
            for n, s in zip(ineq.normals, ineq.scales)
        )

    points = iter_lattice_points(polytope, 1, settings)
    return sum(1 for u in points if strictly_inside(u))


def as_ambient(polytope: CSPolytope, u: Tuple[int, ...]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in polytope.lattice.from_coords(u))
