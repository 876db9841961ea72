from .constructions import cone_over_graph, stellar_subdivide, whisker
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    graph_of_complex,
    path_graph,
    wheel_graph,
)
from .profile import ComplexProfile, classify, facet_ridge_graph, free_ridges_of_facet
from .simplicial import (
    Face,
    HomologyGroup,
    SimplicialComplex,
    boundary_complex,
    boundary_map,
    build_complex,
    homology,
    homology_table,
    relabel,
    relative_homology,
    ridge_incidence,
    skeleton,
    subcomplex,
)

__all__ = [
    "Face",
    "SimplicialComplex",
    "HomologyGroup",
    "ComplexProfile",
    "Graph",
    "build_complex",
    "boundary_map",
    "boundary_complex",
    "classify",
    "homology",
    "homology_table",
    "relative_homology",
    "ridge_incidence",
    "facet_ridge_graph",
    "free_ridges_of_facet",
    "skeleton",
    "subcomplex",
    "relabel",
    # Graphs
    "graph_of_complex",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "wheel_graph",
    # Constructions
    "cone_over_graph",
    "whisker",
    "stellar_subdivide",
]
