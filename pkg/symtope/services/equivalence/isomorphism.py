"""Facet-ridge graph isomorphism for shellable spheres."""

from typing import Dict, Optional

import networkx as nx
import structlog
from networkx.algorithms.isomorphism import GraphMatcher

from symtope.core.config import Settings, resolve
from symtope.core.errors import check_guard
from symtope.services.complexes import Graph, SimplicialComplex, facet_ridge_graph

logger = structlog.get_logger(__name__)


def triangle_count(graph: Graph) -> int:
    return sum(nx.triangles(graph.to_networkx()).values()) // 3


def _degree_profile(graph: nx.Graph) -> list:
    """Sorted (degree, sorted neighbour degrees) pairs."""
    return sorted(
        (graph.degree(v), tuple(sorted(graph.degree(u) for u in graph[v])))
        for v in graph
    )


def facet_ridge_isomorphism(
    first: SimplicialComplex,
    second: SimplicialComplex,
    settings: Optional[Settings] = None,
) -> Optional[Dict[int, int]]:
    """
    A facet bijection (1-based lex indices) preserving ridge adjacency, or
    None. Cheap invariants are compared before the backtracking search.
    """
    settings = resolve(settings)
    for complex_ in (first, second):
        check_guard("max_iso_facets", len(complex_.top_facets), settings.MAX_ISO_FACETS)
    if first.dim != second.dim or len(first.top_facets) != len(second.top_facets):
        return None
    g1 = facet_ridge_graph(first).to_networkx()
    g2 = facet_ridge_graph(second).to_networkx()
    if g1.number_of_edges() != g2.number_of_edges():
        return None
    if _degree_profile(g1) != _degree_profile(g2):
        return None
    matcher = GraphMatcher(g1, g2)
    mapping = next(matcher.isomorphisms_iter(), None)
    return dict(sorted(mapping.items())) if mapping is not None else None


def shellable_sphere_equivalence(
    first: SimplicialComplex,
    second: SimplicialComplex,
    settings: Optional[Settings] = None,
) -> bool:
    """
    For shellable spheres (not verified) the cohomology polytopes are
    unimodularly equivalent exactly when the facet-ridge graphs are isomorphic.
    """
    equivalent = facet_ridge_isomorphism(first, second, settings) is not None
    logger.info(
        "shellable_sphere_equivalence",
        first=first.name,
        second=second.name,
        facets=(len(first.top_facets), len(second.top_facets)),
        equivalent=equivalent,
    )
    return equivalent
