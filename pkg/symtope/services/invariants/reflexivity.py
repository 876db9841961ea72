"""
Reflexivity of conv[A | -A].

P is reflexive when its polar dual is a lattice polytope (for the dual of the
lattice aff(P) ∩ Z^m). Full-column-rank matrices are decided from the torsion
vectors of their Smith form; everything else goes facet by facet.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import DimensionError
from symtope.services.complexes import (
    SimplicialComplex,
    boundary_map,
    homology,
    subcomplex,
)
from symtope.services.linalg import matroid_bases, parity_criterion, torsion_vectors
from symtope.services.polytope import (
    CSPolytope,
    crosspolytope_facet,
    crosspolytope_polar_rows,
    facets_hull,
    homology_polytope,
    is_crosspolytope,
    polar_vertex,
)

logger = structlog.get_logger(__name__)

ALL_DIVISORS_ONE = "all-divisors-one"
TORSION_PARITY = "torsion-parity"
Q3_TORSION = "q>=3-torsion"
POLAR_INTEGRALITY = "polar-integrality"
ROUTES = (ALL_DIVISORS_ONE, TORSION_PARITY, Q3_TORSION, POLAR_INTEGRALITY)

Witness = Tuple[Fraction, ...]


@dataclass(frozen=True)
class ReflexivityVerdict:
    """``witnesses`` holds offending polar vertices or torsion vectors."""

    reflexive: bool
    route: str
    witnesses: Tuple[Witness, ...] = ()


@dataclass(frozen=True)
class ForestVerdict:
    facet_indices: Tuple[int, ...]
    verdict: ReflexivityVerdict


@dataclass(frozen=True)
class ForestReport:
    """
    ``reflexive`` is True when every forest passes and None otherwise (the
    test is only sufficient).
    """

    reflexive: Optional[bool]
    forests: Tuple[ForestVerdict, ...] = field(default=(), repr=False)


def _failing_signs(row: Sequence[Fraction]) -> Tuple[int, ...]:
    """A sign vector b with row·b ∉ Z, for a row that fails the parity criterion."""
    ones = (1,) * len(row)
    if sum(row).denominator != 1:
        return ones
    j = next(i for i, x in enumerate(row) if (2 * x).denominator != 1)
    return tuple(-1 if i == j else 1 for i in range(len(row)))


class ReflexivityCalculator:
    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return resolve(self._settings)

    def is_reflexive(
        self,
        polytope: CSPolytope,
        route: Optional[str] = None,
        settings: Optional[Settings] = None,
    ) -> ReflexivityVerdict:
        settings = settings or self.settings
        if route is not None and route not in ROUTES:
            raise ValueError(f"unknown reflexivity route {route!r}")
        if route == POLAR_INTEGRALITY or not is_crosspolytope(polytope):
            verdict = self._polar_integrality(polytope, settings)
        else:
            verdict = self._torsion_route(polytope)
        logger.info(
            "is_reflexive",
            polytope=polytope.name,
            route=verdict.route,
            reflexive=verdict.reflexive,
        )
        return verdict

    def _torsion_route(self, polytope: CSPolytope) -> ReflexivityVerdict:
        torsion = torsion_vectors(polytope.A, polytope.snf)
        if not torsion:
            return ReflexivityVerdict(True, ALL_DIVISORS_ONE)
        large = [t.v for t in torsion if t.order >= 3]
        if large:
            return ReflexivityVerdict(False, Q3_TORSION, tuple(large))
        failing = [t.v for t in torsion if not parity_criterion(t.v)]
        return ReflexivityVerdict(not failing, TORSION_PARITY, tuple(failing))

    def _polar_integrality(
        self, polytope: CSPolytope, settings: Settings
    ) -> ReflexivityVerdict:
        if is_crosspolytope(polytope):
            # w_u = (Uᵀ)⁻¹·b is integral for every b iff every row passes parity
            rows = crosspolytope_polar_rows(polytope)
            bad = [row for row in rows if not parity_criterion(row)]
            normals = tuple(
                crosspolytope_facet(polytope, _failing_signs(row)).normal for row in bad
            )
            return ReflexivityVerdict(
                not bad, POLAR_INTEGRALITY, normals[: settings.WITNESS_CAP]
            )
        witnesses: List[Witness] = []
        integral = True
        for facet in facets_hull(polytope, settings):
            vertex = polar_vertex(polytope, facet)
            if not vertex.integral:
                integral = False
                if len(witnesses) < settings.WITNESS_CAP:
                    witnesses.append(vertex.vector)
        return ReflexivityVerdict(integral, POLAR_INTEGRALITY, tuple(witnesses))

    def by_topology(
        self, complex_: SimplicialComplex, settings: Optional[Settings] = None
    ) -> ReflexivityVerdict:
        """
        Decide reflexivity of P_Δ from H_{d-1}(Δ) when H_d(Δ) = 0: free means
        reflexive, q-torsion with q ≥ 3 means not, and pure 2-torsion is
        reflexive in even dimension and otherwise decided by the parity of the
        half-entries of the torsion vectors.
        """
        settings = settings or self.settings
        d = complex_.dim
        if d < 1:
            raise DimensionError("polytopes of 0-dimensional complexes are not defined")
        if not homology(complex_, d).is_zero():
            logger.info(
                "reflexivity_by_topology_redirect",
                complex=complex_.name,
                reason="top_homology",
            )
            return self.is_reflexive(homology_polytope(complex_), settings=settings)
        group = homology(complex_, d - 1)
        if group.is_free():
            return ReflexivityVerdict(True, ALL_DIVISORS_ONE)
        torsion = torsion_vectors(boundary_map(complex_, d))
        if any(q >= 3 for q in group.torsion):
            large = tuple(t.v for t in torsion if t.order >= 3)
            return ReflexivityVerdict(False, Q3_TORSION, large)
        if d % 2 == 0:
            return ReflexivityVerdict(True, TORSION_PARITY)
        odd = tuple(t.v for t in torsion if t.half_support() % 2)
        return ReflexivityVerdict(not odd, TORSION_PARITY, odd)

    def via_forests(
        self, complex_: SimplicialComplex, settings: Optional[Settings] = None
    ) -> ForestReport:
        """Sufficient test: every simplicial spanning forest Γ has P_Γ reflexive."""
        settings = settings or self.settings
        d = complex_.dim
        if homology(complex_, d).is_zero():
            indices = tuple(range(len(complex_.top_facets)))
            forests = [ForestVerdict(indices, self.by_topology(complex_, settings))]
        else:
            forests = []
            for basis in matroid_bases(boundary_map(complex_, d), settings):
                forest = subcomplex(complex_, basis)
                forests.append(ForestVerdict(basis, self.by_topology(forest, settings)))
        passed = all(f.verdict.reflexive for f in forests)
        logger.info(
            "reflexivity_via_forests",
            complex=complex_.name,
            forests=len(forests),
            failing=sum(1 for f in forests if not f.verdict.reflexive),
        )
        return ForestReport(True if passed else None, tuple(forests))

    def dual_dilation(
        self, polytope: CSPolytope, settings: Optional[Settings] = None
    ) -> bool:
        """α_max times every polar vertex is a lattice point."""
        settings = settings or self.settings
        alpha = polytope.snf.max_divisor
        if is_crosspolytope(polytope):
            ok = all(
                parity_criterion([alpha * x for x in row])
                for row in crosspolytope_polar_rows(polytope)
            )
        else:
            ok = all(
                all((alpha * x).denominator == 1 for x in facet.coords)
                for facet in facets_hull(polytope, settings)
            )
        if not ok:
            logger.error("dual_dilation_failed", polytope=polytope.name, alpha=alpha)
        return ok


reflexivity_calculator = ReflexivityCalculator()


def is_reflexive(
    polytope: CSPolytope,
    route: Optional[str] = None,
    settings: Optional[Settings] = None,
) -> ReflexivityVerdict:
    return reflexivity_calculator.is_reflexive(polytope, route, settings)


def reflexivity_by_topology(
    complex_: SimplicialComplex, settings: Optional[Settings] = None
) -> ReflexivityVerdict:
    return reflexivity_calculator.by_topology(complex_, settings)


def reflexivity_via_forests(
    complex_: SimplicialComplex, settings: Optional[Settings] = None
) -> ForestReport:
    return reflexivity_calculator.via_forests(complex_, settings)


def dual_dilation_check(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> bool:
    return reflexivity_calculator.dual_dilation(polytope, settings)
