from .hull import (
    Facet,
    PolarVertex,
    crosspolytope_facet,
    crosspolytope_polar_rows,
    facets_hull,
    polar_vertex,
    vertex_count,
    vertex_mask,
)
from .labeling import (
    FRACTIONAL,
    FULL,
    ZERO,
    FacetLabeling,
    classify_facet,
    equal_weight_partition_count,
    facet_count_closed_orientable,
    facet_count_corank1,
    facet_labeling,
    support_complex,
    verify_spanning_forest,
)
from .lattice import LatticeCoordinates, lattice_coordinates
from .points import (
    as_ambient,
    interior_lattice_points,
    iter_lattice_points,
    lattice_points,
    normalized_volume,
    pulling_triangulation,
)
from .polytope import (
    COHOMOLOGY,
    HOMOLOGY,
    MATRIX,
    CSPolytope,
    affine_hull_basis,
    cohomology_polytope,
    dimension,
    expected_cohomology_vertices,
    homology_polytope,
    is_crosspolytope,
    polytope_from_matrix,
)

__all__ = [
    "CSPolytope",
    "LatticeCoordinates",
    "Facet",
    "FacetLabeling",
    "PolarVertex",
    "HOMOLOGY",
    "COHOMOLOGY",
    "MATRIX",
    # Construction
    "polytope_from_matrix",
    "homology_polytope",
    "cohomology_polytope",
    "lattice_coordinates",
    "dimension",
    "affine_hull_basis",
    "is_crosspolytope",
    "expected_cohomology_vertices",
    # Hull
    "facets_hull",
    "crosspolytope_facet",
    "crosspolytope_polar_rows",
    "vertex_mask",
    "vertex_count",
    "polar_vertex",
    # Labelings
    "facet_labeling",
    "support_complex",
    "verify_spanning_forest",
    "classify_facet",
    "FULL",
    "ZERO",
    "FRACTIONAL",
    "equal_weight_partition_count",
    "facet_count_corank1",
    "facet_count_closed_orientable",
    # Lattice points
    "lattice_points",
    "iter_lattice_points",
    "interior_lattice_points",
    "normalized_volume",
    "pulling_triangulation",
    "as_ambient",
]
