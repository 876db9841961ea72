from .fingerprint import Fingerprint, fingerprint
from .isomorphism import (
    facet_ridge_isomorphism,
    shellable_sphere_equivalence,
    triangle_count,
)
from .models import (
    BOUNDARY_CROSSPOLYTOPE,
    BOUNDARY_WHISKERED,
    CLOSED_CYCLE,
    CLOSED_FACET_RIDGE,
    CONE_CROSSPOLYTOPE,
    CONE_PLANAR_DUAL,
    GRAPH_CYCLE,
    GRAPH_SELF,
    ROUTES,
    ModelCalculator,
    ModelVerdict,
    applicable_routes,
    cone_apex,
    model_calculator,
    model_polytope,
)
from .planar import (
    DualGraph,
    PlanarityReport,
    RotationSystem,
    is_planar,
    planar_dual,
    planar_rotation_system,
    planarity,
    trace_faces,
)
from .sep import (
    OrientationSigns,
    crosspolytope,
    incidence_shaped,
    orientation_signs,
    sep_of_graph,
    signed_boundary,
    whiskered_projection,
)

__all__ = [
    "Fingerprint",
    "OrientationSigns",
    "ModelVerdict",
    "DualGraph",
    "PlanarityReport",
    "RotationSystem",
    # Symmetric edge polytopes
    "sep_of_graph",
    "crosspolytope",
    "orientation_signs",
    "signed_boundary",
    "incidence_shaped",
    "whiskered_projection",
    # Fingerprints and models
    "fingerprint",
    "ModelCalculator",
    "model_calculator",
    "model_polytope",
    "applicable_routes",
    "cone_apex",
    "ROUTES",
    "CLOSED_CYCLE",
    "CLOSED_FACET_RIDGE",
    "BOUNDARY_CROSSPOLYTOPE",
    "BOUNDARY_WHISKERED",
    "GRAPH_SELF",
    "GRAPH_CYCLE",
    "CONE_CROSSPOLYTOPE",
    "CONE_PLANAR_DUAL",
    # Planar graphs
    "planarity",
    "is_planar",
    "planar_rotation_system",
    "planar_dual",
    "trace_faces",
    # Isomorphism
    "facet_ridge_isomorphism",
    "shellable_sphere_equivalence",
    "triangle_count",
]
