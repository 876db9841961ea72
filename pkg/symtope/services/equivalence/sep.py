"""
Symmetric edge polytopes and the sign data that turn pseudomanifold
coboundaries into graph incidence matrices.
"""

from dataclasses import dataclass
from typing import Optional, Protocol, Tuple

import structlog

from symtope.core.errors import DimensionError, NotOrientableError
from symtope.services.complexes import (
    SimplicialComplex,
    boundary_complex,
    boundary_map,
    classify,
    facet_ridge_graph,
    ridge_incidence,
    whisker,
)
from symtope.services.linalg import IntegerMatrix, integer_kernel_basis
from symtope.services.polytope import CSPolytope, polytope_from_matrix

logger = structlog.get_logger(__name__)


class HasIncidence(Protocol):
    def incidence_matrix(self) -> IntegerMatrix: ...


@dataclass(frozen=True)
class OrientationSigns:
    epsilon: Tuple[int, ...]
    closed: bool

    @property
    def size(self) -> int:
        return len(self.epsilon)


def sep_of_graph(graph: HasIncidence, name: Optional[str] = None) -> CSPolytope:
    """P_G = conv[∂_1 | -∂_1]; loops vanish and parallel edges merge."""
    return polytope_from_matrix(graph.incidence_matrix(), name=name)


def crosspolytope(s: int, name: Optional[str] = None) -> CSPolytope:
    if s < 1:
        raise DimensionError("crosspolytope dimension must be positive")
    return polytope_from_matrix(IntegerMatrix.identity(s), name=name or f"cross({s})")


def _top_sign_kernel(matrix: IntegerMatrix) -> Tuple[int, ...]:
    kernel = integer_kernel_basis(matrix)
    if len(kernel) != 1:
        raise NotOrientableError(f"top kernel has rank {len(kernel)}, expected 1")
    v = kernel[0]
    if any(abs(x) != 1 for x in v):
        raise NotOrientableError("top kernel generator is not a ±1 vector")
    return v if v[0] > 0 else tuple(-x for x in v)


def orientation_signs(complex_: SimplicialComplex) -> OrientationSigns:
    """
    ε with ε_1∂(σ_1) + ... + ε_s∂(σ_s) = 0, read from the kernel of ∂_d or,
    with boundary, of the top map relative to the boundary complex.
    Normalized so that ε_1 = +1.
    """
    if complex_.dim < 1:
        raise DimensionError("orientation signs need a complex of dimension ≥ 1")
    profile = classify(complex_)
    if not profile.pseudomanifold or not profile.orientable:
        raise NotOrientableError(
            f"{complex_.name or 'complex'} is not an orientable pseudomanifold"
        )
    d = complex_.dim
    if profile.closed:
        top = boundary_map(complex_, d)
    else:
        top = boundary_map(complex_, d, relative_to=boundary_complex(complex_))
    epsilon = _top_sign_kernel(top)
    if not incidence_shaped(complex_, epsilon):
        raise ArithmeticError("signed top boundary map is not incidence-shaped")
    logger.debug(
        "orientation_signs",
        complex=complex_.name,
        closed=profile.closed,
        facets=len(epsilon),
    )
    return OrientationSigns(epsilon, profile.closed)


def signed_boundary(
    complex_: SimplicialComplex, epsilon: Tuple[int, ...]
) -> IntegerMatrix:
    """∂_d · D(ε)."""
    d_top = boundary_map(complex_, complex_.dim)
    return IntegerMatrix.from_rows(
        [[x * e for x, e in zip(row, epsilon)] for row in d_top.rows()], d_top.n_cols
    )


def incidence_shaped(complex_: SimplicialComplex, epsilon: Tuple[int, ...]) -> bool:
    """Every interior-ridge row of ∂_d·D(ε) holds exactly one +1 and one -1."""
    signed = signed_boundary(complex_, epsilon)
    incidence = ridge_incidence(complex_)
    for r, ridge in enumerate(complex_.faces(complex_.dim - 1)):
        if len(incidence[ridge]) != 2:
            continue
        if sorted(x for x in signed.row(r) if x) != [-1, 1]:
            return False
    return True


def whiskered_projection(complex_: SimplicialComplex) -> CSPolytope:
    """
    π_V(P_{w(G,A)}): the SEP of the facet-ridge graph whiskered at the facets
    holding a free ridge, projected onto the facet coordinates.
    """
    graph = facet_ridge_graph(complex_)
    profile = classify(complex_)
    anchored = [i + 1 for i, c in enumerate(profile.free_ridge_count_per_facet) if c]
    whiskered = whisker(graph, anchored)
    projected = whiskered.incidence_matrix().select_rows(range(graph.n_vertices))
    logger.debug(
        "whiskered_projection", facets=graph.n_vertices, whiskers=len(anchored)
    )
    name = f"proj(w(G({complex_.name or 'complex'})))"
    return polytope_from_matrix(projected, name=name)
