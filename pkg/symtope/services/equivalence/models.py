"""
Model polytopes predicted by the structure of a complex.

Each route names a structural class of complexes and the symmetric edge
polytope (or crosspolytope) its homology or cohomology polytope is
unimodularly equivalent to. The prediction is backed by a fingerprint
comparison; lattice equivalence itself is never decided.
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Dict, List, Optional, Tuple, Union

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import DimensionError, NoApplicableRouteError
from symtope.services.complexes import (
    ComplexProfile,
    Graph,
    SimplicialComplex,
    classify,
    cycle_graph,
    facet_ridge_graph,
    graph_of_complex,
    homology,
)
from symtope.services.equivalence.fingerprint import Fingerprint, fingerprint
from symtope.services.equivalence.planar import planar_dual, planarity
from symtope.services.equivalence.sep import (
    crosspolytope,
    sep_of_graph,
    whiskered_projection,
)
from symtope.services.polytope import (
    COHOMOLOGY,
    HOMOLOGY,
    CSPolytope,
    cohomology_polytope,
    homology_polytope,
)

logger = structlog.get_logger(__name__)

CLOSED_CYCLE = "closed-pseudomanifold:cycle"
CLOSED_FACET_RIDGE = "closed-pseudomanifold:facet-ridge-graph"
BOUNDARY_CROSSPOLYTOPE = "pseudomanifold-with-boundary:crosspolytope"
BOUNDARY_WHISKERED = "pseudomanifold-with-boundary:whiskered-projection"
GRAPH_SELF = "graph:symmetric-edge-polytope"
GRAPH_CYCLE = "graph:cycle"
CONE_CROSSPOLYTOPE = "cone-over-graph:crosspolytope"
CONE_PLANAR_DUAL = "cone-over-graph:planar-dual"

ROUTES = {
    HOMOLOGY: (CLOSED_CYCLE, BOUNDARY_CROSSPOLYTOPE, CONE_CROSSPOLYTOPE, GRAPH_SELF),
    COHOMOLOGY: (CLOSED_FACET_RIDGE, BOUNDARY_WHISKERED, CONE_PLANAR_DUAL, GRAPH_CYCLE),
}


@dataclass(frozen=True)
class ModelVerdict:
    route: str
    which: str
    model_name: Optional[str]
    fingerprint: Fingerprint
    model_fingerprint: Optional[Fingerprint]
    note: Optional[str] = None
    model: Optional[CSPolytope] = field(default=None, compare=False, repr=False)

    @property
    def fingerprint_match(self) -> bool:
        if self.model_fingerprint is None:
            return False
        return self.fingerprint.agrees_with(self.model_fingerprint)


def cone_apex(complex_: SimplicialComplex) -> Optional[int]:
    """Apex v when the complex is pure, 2-dimensional and every facet contains v."""
    if complex_.dim != 2 or not complex_.is_pure:
        return None
    common = reduce(
        lambda acc, f: acc & set(f), complex_.facets, set(complex_.facets[0])
    )
    return min(common) if common else None


def _as_complex(item: Union[SimplicialComplex, Graph]) -> SimplicialComplex:
    return item.as_complex() if isinstance(item, Graph) else item


class ModelCalculator:
    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return resolve(self._settings)

    def applicable_routes(self, complex_: SimplicialComplex, which: str) -> List[str]:
        if which not in ROUTES:
            raise ValueError(
                f"which must be {HOMOLOGY!r} or {COHOMOLOGY!r}, got {which!r}"
            )
        if complex_.dim < 1:
            return []
        profile = classify(complex_)
        closed_orientable = profile.closed and bool(profile.orientable)
        with_boundary = profile.pseudomanifold and profile.has_boundary
        checks: Dict[str, Callable[[], bool]] = {
            CLOSED_CYCLE: lambda: closed_orientable,
            CLOSED_FACET_RIDGE: lambda: closed_orientable,
            BOUNDARY_CROSSPOLYTOPE: lambda: with_boundary,
            BOUNDARY_WHISKERED: lambda: with_boundary and bool(profile.orientable),
            CONE_CROSSPOLYTOPE: lambda: cone_apex(complex_) is not None,
            CONE_PLANAR_DUAL: lambda: cone_apex(complex_) is not None,
            GRAPH_SELF: lambda: complex_.dim == 1,
            GRAPH_CYCLE: lambda: self._connected_graph(complex_, profile),
        }
        return [route for route in ROUTES[which] if checks[route]()]

    @staticmethod
    def _connected_graph(complex_: SimplicialComplex, profile: ComplexProfile) -> bool:
        if complex_.dim != 1 or not profile.pure or len(complex_.vertices) < 3:
            return False
        return graph_of_complex(complex_).is_connected()

    def model_polytope(
        self,
        item: Union[SimplicialComplex, Graph],
        which: str,
        route: Optional[str] = None,
        want_hstar: bool = False,
        settings: Optional[Settings] = None,
    ) -> ModelVerdict:
        """
        Build the predicted model on the first applicable route (or the
        requested one) and compare fingerprints with the actual polytope.
        """
        settings = settings or self.settings
        complex_ = _as_complex(item)
        routes = self.applicable_routes(complex_, which)
        if route is None:
            if not routes:
                label = complex_.name or "complex"
                raise NoApplicableRouteError(
                    f"no model route for the {which} polytope of {label}"
                )
            route = routes[0]
        elif route not in routes:
            raise NoApplicableRouteError(
                f"route {route!r} does not apply", detail=f"applicable: {routes}"
            )

        if which == HOMOLOGY:
            actual = homology_polytope(complex_)
        else:
            actual = cohomology_polytope(complex_)
        own = fingerprint(actual, want_hstar, settings)
        model, name, note = self._build(complex_, route, settings)
        theirs = fingerprint(model, want_hstar, settings) if model is not None else None
        verdict = ModelVerdict(route, which, name, own, theirs, note, model)
        logger.info(
            "model_polytope",
            complex=complex_.name,
            which=which,
            route=route,
            model=name,
            match=verdict.fingerprint_match,
        )
        return verdict

    def _build(
        self, complex_: SimplicialComplex, route: str, settings: Settings
    ) -> Tuple[Optional[CSPolytope], Optional[str], Optional[str]]:
        s = len(complex_.top_facets)
        if route == CLOSED_CYCLE:
            return sep_of_graph(cycle_graph(s), f"SEP(C_{s})"), f"SEP(C_{s})", None
        if route == CLOSED_FACET_RIDGE:
            return sep_of_graph(facet_ridge_graph(complex_), "SEP(G)"), "SEP(G)", None
        if route in (BOUNDARY_CROSSPOLYTOPE, CONE_CROSSPOLYTOPE):
            if not homology(complex_, complex_.dim).is_zero():
                raise DimensionError("top homology does not vanish")
            return crosspolytope(s), f"crosspolytope({s})", None
        if route == BOUNDARY_WHISKERED:
            return whiskered_projection(complex_), "proj(SEP(w(G, A)))", None
        if route == GRAPH_SELF:
            return sep_of_graph(graph_of_complex(complex_), "SEP(G)"), "SEP(G)", None
        if route == GRAPH_CYCLE:
            n = len(complex_.vertices)
            return sep_of_graph(cycle_graph(n), f"SEP(C_{n})"), f"SEP(C_{n})", None
        if route == CONE_PLANAR_DUAL:
            h = graph_of_complex(complex_)
            report = planarity(h, settings)
            if not report.planar:
                note = "graph of the cone is not planar: no edge polytope model"
                return None, None, note
            dual = planar_dual(h, report.rotation)
            return sep_of_graph(dual, "SEP(H*)"), "SEP(H*)", None
        raise NoApplicableRouteError(f"unknown route {route!r}")


model_calculator = ModelCalculator()


def applicable_routes(item: Union[SimplicialComplex, Graph], which: str) -> List[str]:
    return model_calculator.applicable_routes(_as_complex(item), which)


def model_polytope(
    item: Union[SimplicialComplex, Graph],
    which: str,
    route: Optional[str] = None,
    want_hstar: bool = False,
    settings: Optional[Settings] = None,
) -> ModelVerdict:
    return model_calculator.model_polytope(item, which, route, want_hstar, settings)
