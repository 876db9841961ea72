"""Structural classification: purity, pseudomanifold status, orientability."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import networkx as nx
import structlog

from symtope.core.errors import NotPureError
from symtope.services.complexes.graph import Graph
from symtope.services.complexes.simplicial import (
    HomologyGroup,
    SimplicialComplex,
    boundary_complex,
    homology,
    relative_homology,
    ridge_incidence,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ComplexProfile:
    dim: int
    f_vector: Tuple[int, ...]
    pure: bool
    pseudomanifold: bool
    closed: bool
    strongly_connected: bool
    orientable: Optional[bool]
    boundary_ridges: Tuple[int, ...]
    free_ridge_count_per_facet: Tuple[int, ...]

    @property
    def has_boundary(self) -> bool:
        return bool(self.boundary_ridges)


def facet_ridge_graph(complex_: SimplicialComplex) -> Graph:
    """
    Graph on the facets (labelled 1..s in lex order) with an edge whenever two
    facets share a ridge.
    """
    if not complex_.is_pure:
        raise NotPureError("facet-ridge graph needs a pure complex")
    s = len(complex_.top_facets)
    edges = set()
    for owners in ridge_incidence(complex_).values():
        for i, a in enumerate(owners):
            for b in owners[i + 1 :]:
                edges.add((a + 1, b + 1))
    return Graph.from_edges(edges, range(1, s + 1))


def _strongly_connected(complex_: SimplicialComplex) -> bool:
    if not complex_.is_pure:
        return False
    if complex_.dim == 0:
        return len(complex_.vertices) == 1
    return nx.is_connected(facet_ridge_graph(complex_).to_networkx())


def _top_group_is_z(group: HomologyGroup) -> bool:
    return group.free_rank == 1 and not group.torsion


def classify(complex_: SimplicialComplex) -> ComplexProfile:
    """
    Flags never raise; orientability is left undefined (None) unless the
    complex is a pseudomanifold of positive dimension.
    """
    d = complex_.dim
    pure = complex_.is_pure
    top = complex_.top_facets
    if d == 0:
        connected = len(complex_.vertices) == 1
        return ComplexProfile(
            d,
            complex_.f_vector,
            pure,
            connected,
            connected,
            connected,
            None,
            (),
            (0,) * len(top),
        )

    incidence = ridge_incidence(complex_)
    ridges = complex_.faces(d - 1)
    counts = [len(incidence[r]) for r in ridges]
    boundary = tuple(i for i, c in enumerate(counts) if c == 1)
    free_per_facet = [0] * len(top)
    for i in boundary:
        free_per_facet[incidence[ridges[i]][0]] += 1

    strongly = _strongly_connected(complex_)
    pseudo = pure and strongly and all(c <= 2 for c in counts)
    closed = pseudo and not boundary
    orientable: Optional[bool] = None
    if pseudo:
        if closed:
            orientable = _top_group_is_z(homology(complex_, d))
        else:
            relative = relative_homology(complex_, boundary_complex(complex_), d)
            orientable = _top_group_is_z(relative)
    logger.debug(
        "classified",
        dim=d,
        pure=pure,
        pseudomanifold=pseudo,
        closed=closed,
        orientable=orientable,
    )
    return ComplexProfile(
        dim=d,
        f_vector=complex_.f_vector,
        pure=pure,
        pseudomanifold=pseudo,
        closed=closed,
        strongly_connected=strongly,
        orientable=orientable,
        boundary_ridges=boundary,
        free_ridge_count_per_facet=tuple(free_per_facet),
    )


def free_ridges_of_facet(complex_: SimplicialComplex, facet_index: int) -> List[int]:
    """Indices (into the ridge table) of the free ridges of one top facet."""
    incidence = ridge_incidence(complex_)
    ridges = complex_.faces(complex_.dim - 1)
    return [i for i, r in enumerate(ridges) if incidence[r] == [facet_index]]
