"""
Simplicial complexes given by facet lists.

Faces of each dimension are kept as lex-sorted tuples of sorted vertex labels;
the position of a face in that list is its row/column identity in every
boundary matrix.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import structlog

from symtope.core.errors import DimensionError, InvalidComplexError, SubcomplexError
from symtope.services.linalg import IntegerMatrix, integer_rank, smith_normal_form

logger = structlog.get_logger(__name__)

Face = Tuple[int, ...]


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank ⊕ Z/q_1 ⊕ ... with q_1 | q_2 | ..."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts += [f"Z_{q}" for q in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: Tuple[int, ...]
    facets: Tuple[Face, ...]
    name: Optional[str] = field(default=None, compare=False)

    @cached_property
    def faces_by_dim(self) -> Tuple[Tuple[Face, ...], ...]:
        by_dim: Dict[int, set] = defaultdict(set)
        for facet in self.facets:
            for k in range(1, len(facet) + 1):
                by_dim[k - 1].update(combinations(facet, k))
        return tuple(tuple(sorted(by_dim[j])) for j in range(self.dim + 1))

    @cached_property
    def _index(self) -> Tuple[Dict[Face, int], ...]:
        return tuple({f: i for i, f in enumerate(faces)} for faces in self.faces_by_dim)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(faces) for faces in self.faces_by_dim)

    def faces(self, j: int) -> Tuple[Face, ...]:
        if j == -1:
            return ((),)
        if j < 0 or j > self.dim:
            return ()
        return self.faces_by_dim[j]

    def face_index(self, face: Iterable[int]) -> int:
        face = tuple(sorted(face))
        return self._index[len(face) - 1][face]

    def contains(self, face: Iterable[int]) -> bool:
        face = tuple(sorted(face))
        if not face or len(face) - 1 > self.dim:
            return False
        return face in self._index[len(face) - 1]

    @property
    def top_facets(self) -> Tuple[Face, ...]:
        """Facets of maximal dimension, lex-sorted."""
        return self.faces(self.dim)

    @property
    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.contains(f) for f in self.facets)

    def __str__(self) -> str:
        sep = "" if self.vertices[-1] < 10 else ","
        body = ", ".join(sep.join(map(str, f)) for f in self.facets)
        return f"{self.name or 'complex'}<{body}>"


def build_complex(
    facet_list: Iterable[Iterable[int]], name: Optional[str] = None
) -> SimplicialComplex:
    """Build a complex from facets; contained (dominated) faces are absorbed."""
    raw = [tuple(sorted(set(f))) for f in facet_list]
    if not raw:
        raise InvalidComplexError("facet list is empty")
    for f in raw:
        if not f:
            raise InvalidComplexError("empty facet")
        if any(not isinstance(v, int) or isinstance(v, bool) or v <= 0 for v in f):
            raise InvalidComplexError(f"vertex labels must be positive integers: {f}")
    unique = sorted(set(raw), key=lambda f: (-len(f), f))
    maximal: List[Face] = []
    for f in unique:
        fs = set(f)
        if not any(fs <= set(g) for g in maximal):
            maximal.append(f)
    if len(maximal) < len(unique):
        logger.debug("absorbed_faces", dropped=len(unique) - len(maximal))
    vertices = tuple(sorted({v for f in maximal for v in f}))
    return SimplicialComplex(vertices, tuple(sorted(maximal)), name)


def _sub_faces(face: Face) -> List[Tuple[int, Face]]:
    """(sign, face minus one vertex) with sign (-1)^k for the k-th vertex."""
    return [
        (1 if k % 2 == 0 else -1, face[:k] + face[k + 1 :]) for k in range(len(face))
    ]


def boundary_map(
    complex_: SimplicialComplex, j: int, relative_to: Optional[SimplicialComplex] = None
) -> IntegerMatrix:
    """∂_j with rows the lex-sorted (j-1)-faces and columns the lex-sorted j-faces."""
    if j < 0 or j > complex_.dim:
        raise DimensionError(f"boundary index {j} outside 0..{complex_.dim}")
    return _boundary_matrix(complex_, j, relative_to)


def _boundary_matrix(
    complex_: SimplicialComplex, j: int, relative_to: Optional[SimplicialComplex]
) -> IntegerMatrix:
    # j = dim + 1 gives the zero-column map homology needs in the top degree
    if relative_to is not None and not relative_to.is_subcomplex_of(complex_):
        raise SubcomplexError("relative_to is not a subcomplex")
    cols = list(complex_.faces(j))
    rows = list(complex_.faces(j - 1)) if j > 0 else []
    if relative_to is not None:
        cols = [f for f in cols if not relative_to.contains(f)]
        rows = [f for f in rows if not relative_to.contains(f)]
    row_index = {f: i for i, f in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    if j > 0:
        for c, face in enumerate(cols):
            for sign, sub in _sub_faces(face):
                r = row_index.get(sub)
                if r is not None:
                    data[r][c] = sign
    return IntegerMatrix.from_rows(data, len(cols))


def _homology_from_maps(d_j: IntegerMatrix, d_next: IntegerMatrix) -> HomologyGroup:
    nullity = d_j.n_cols - integer_rank(d_j.rows())
    if d_next.n_cols == 0 or d_next.n_rows == 0:
        return HomologyGroup(nullity, ())
    snf = smith_normal_form(d_next)
    return HomologyGroup(nullity - snf.rank, snf.torsion)


def homology(complex_: SimplicialComplex, j: int) -> HomologyGroup:
    """H_j(Δ; Z) = ker ∂_j / im ∂_{j+1}; torsion from the divisors of ∂_{j+1}."""
    if j < 0 or j > complex_.dim:
        raise DimensionError(f"homology degree {j} outside 0..{complex_.dim}")
    return _homology_from_maps(
        boundary_map(complex_, j), _boundary_matrix(complex_, j + 1, None)
    )


def relative_homology(
    complex_: SimplicialComplex, sub: Optional[SimplicialComplex], j: int
) -> HomologyGroup:
    if sub is None:
        return homology(complex_, j)
    if j < 0 or j > complex_.dim:
        raise DimensionError(f"homology degree {j} outside 0..{complex_.dim}")
    return _homology_from_maps(
        boundary_map(complex_, j, relative_to=sub),
        _boundary_matrix(complex_, j + 1, sub),
    )


def homology_table(complex_: SimplicialComplex) -> List[HomologyGroup]:
    return [homology(complex_, j) for j in range(complex_.dim + 1)]


def ridge_incidence(complex_: SimplicialComplex) -> Dict[Face, List[int]]:
    """Map each ridge of the top-dimensional facets to the facets containing it."""
    d = complex_.dim
    top = complex_.top_facets
    incidence: Dict[Face, List[int]] = {r: [] for r in complex_.faces(d - 1)}
    for idx, facet in enumerate(top):
        for _, ridge in _sub_faces(facet):
            incidence.setdefault(ridge, []).append(idx)
    return incidence


def boundary_complex(complex_: SimplicialComplex) -> Optional[SimplicialComplex]:
    """Subcomplex generated by the free ridges (ridges in exactly one facet)."""
    if complex_.dim == 0:
        return None
    free = [r for r, owners in ridge_incidence(complex_).items() if len(owners) == 1]
    if not free:
        return None
    name = f"boundary({complex_.name})" if complex_.name else None
    return build_complex(free, name=name)


def skeleton(complex_: SimplicialComplex, j: int) -> SimplicialComplex:
    if j < 0 or j > complex_.dim:
        raise DimensionError(f"skeleton dimension {j} outside 0..{complex_.dim}")
    faces = [f for k in range(j + 1) for f in complex_.faces(k)]
    return build_complex(faces)


def subcomplex(
    complex_: SimplicialComplex,
    facet_indices: Sequence[int],
    name: Optional[str] = None,
) -> SimplicialComplex:
    """Subcomplex generated by the chosen top-dimensional facets."""
    top = complex_.top_facets
    return build_complex([top[i] for i in facet_indices], name=name)


def relabel(
    complex_: SimplicialComplex, mapping: Dict[int, int], name: Optional[str] = None
) -> SimplicialComplex:
    if len(set(mapping[v] for v in complex_.vertices)) != len(complex_.vertices):
        raise InvalidComplexError("relabeling must be injective")
    return build_complex(
        [[mapping[v] for v in f] for f in complex_.facets], name=name or complex_.name
    )
