"""Cones over graphs, whiskering and stellar subdivision."""

from typing import Dict, Iterable, Optional

from symtope.core.errors import InvalidComplexError, LabelCollisionError
from symtope.services.complexes.graph import Graph
from symtope.services.complexes.simplicial import SimplicialComplex, build_complex


def cone_over_graph(
    graph: Graph, apex: Optional[int] = None, name: Optional[str] = None
) -> SimplicialComplex:
    """
    Complex with facets e ∪ {apex} for every edge e (isolated vertices give
    cone edges).
    """
    apex = apex if apex is not None else max(graph.vertices, default=0) + 1
    if apex in graph.vertices:
        raise LabelCollisionError(f"cone apex {apex} is already a vertex of the graph")
    facets = [(u, v, apex) for u, v in graph.sorted_edges]
    facets += [(v, apex) for v in graph.vertices if graph.degree(v) == 0]
    if not facets:
        raise InvalidComplexError("cannot cone over an empty graph")
    return build_complex(facets, name=name)


def whisker(
    graph: Graph, subset: Iterable[int], leaves: Optional[Dict[int, int]] = None
) -> Graph:
    """
    Attach a new leaf to every vertex of ``subset``. Leaf labels come from
    ``leaves`` when given, otherwise max label + 1, + 2, ... in vertex order.
    """
    subset = sorted(set(subset))
    missing = [v for v in subset if v not in graph.vertices]
    if missing:
        raise InvalidComplexError(f"whisker vertices not in graph: {missing}")
    if leaves is None:
        start = max(graph.vertices, default=0) + 1
        leaves = {v: start + i for i, v in enumerate(subset)}
    used = set(graph.vertices)
    for v in subset:
        leaf = leaves[v]
        if leaf in used:
            raise LabelCollisionError(
                f"whisker leaf {leaf} collides with an existing vertex"
            )
        used.add(leaf)
    return Graph.from_edges(
        list(graph.edges) + [(v, leaves[v]) for v in subset],
        list(graph.vertices) + [leaves[v] for v in subset],
    )


def stellar_subdivide(
    complex_: SimplicialComplex,
    facet: Iterable[int],
    new_vertex: Optional[int] = None,
    name: Optional[str] = None,
) -> SimplicialComplex:
    """Replace facet σ by the facets σ∖{v} ∪ {x}, v ∈ σ, for fresh x."""
    sigma = tuple(sorted(facet))
    if sigma not in complex_.facets:
        raise InvalidComplexError(f"{sigma} is not a facet of the complex")
    x = new_vertex if new_vertex is not None else complex_.vertices[-1] + 1
    if x in complex_.vertices:
        raise LabelCollisionError(f"subdivision vertex {x} is already in use")
    cells = [f for f in complex_.facets if f != sigma]
    cells += [tuple(u for u in sigma if u != v) + (x,) for v in sigma]
    return build_complex(cells, name=name)
