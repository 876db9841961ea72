"""
Report assembly for the command line and HTTP surfaces.

Each report field is computed independently; a field whose computation trips
a size guard (or another domain error) is replaced by a skip record naming
the guard, and the rest of the report is still produced.
"""

import time
from typing import Callable, Dict, List, Optional, TypeVar, Union

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import (
    GuardExceededError,
    NoApplicableRouteError,
    SymtopeError,
)
from symtope.schemas import (
    AnalysisOptions,
    AnalysisReport,
    BinomialOut,
    CompareReport,
    FacetOut,
    FingerprintOut,
    GroebnerOut,
    HomologyOut,
    IDPOut,
    ModelOut,
    PolytopeSummary,
    ProfileOut,
    ReflexivityOut,
    Skipped,
    SphereEquivalenceOut,
    SweepEntryOut,
    SweepReport,
    TriangulationOut,
)
from symtope.services.complexes import SimplicialComplex, classify, homology_table
from symtope.services.equivalence import (
    Fingerprint,
    facet_ridge_isomorphism,
    fingerprint,
    model_polytope,
)
from symtope.services.groebner import (
    GroebnerBasis,
    Triangulation,
    division_closure_trials,
    gb_diagnostics,
    groebner_basis,
    rut_obstruction,
    saturate,
    triangulation_from_gb,
)
from symtope.services.invariants import (
    dual_dilation_check,
    ehrhart_hstar,
    idp_report,
    is_reflexive,
    reflexivity_by_topology,
    spanning_report,
    sweep_subcomplexes,
)
from symtope.services.linalg import integer_kernel_basis, integer_rank
from symtope.services.polytope import (
    COHOMOLOGY,
    HOMOLOGY,
    CSPolytope,
    cohomology_polytope,
    facet_count_corank1,
    facets_hull,
    homology_polytope,
    is_crosspolytope,
    vertex_count,
)

logger = structlog.get_logger(__name__)

T = TypeVar("T")


def _elapsed_ms(started: float) -> float:
    return round(1000 * (time.perf_counter() - started), 1)


def guarded(field: str, compute: Callable[[], T]) -> Union[T, Skipped]:
    """Run one report field, turning guard trips and domain errors into skip records."""
    started = time.perf_counter()
    try:
        value = compute()
    except GuardExceededError as exc:
        logger.info(
            "field_skipped",
            field=field,
            guard=exc.guard,
            predicted=exc.predicted,
            limit=exc.limit,
        )
        return Skipped(skipped=exc.guard, reason=exc.message)
    except SymtopeError as exc:
        logger.info("field_skipped", field=field, code=exc.code)
        return Skipped(skipped=exc.code, reason=exc.message)
    logger.debug("field_done", field=field, elapsed_ms=_elapsed_ms(started))
    return value


def polytope_of(complex_: SimplicialComplex, which: str) -> CSPolytope:
    if which == HOMOLOGY:
        return homology_polytope(complex_)
    return cohomology_polytope(complex_)


def _whiches(which: str) -> List[str]:
    return [HOMOLOGY, COHOMOLOGY] if which == "both" else [which]


class AnalysisService:
    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return resolve(self._settings)

    def analyze(
        self,
        complex_: SimplicialComplex,
        options: Optional[AnalysisOptions] = None,
        settings: Optional[Settings] = None,
    ) -> AnalysisReport:
        settings = settings or self.settings
        options = options or AnalysisOptions()
        started = time.perf_counter()
        profile = classify(complex_)
        table = homology_table(complex_)
        topology = None
        if HOMOLOGY in _whiches(options.which):
            topology = guarded(
                "reflexivity_by_topology",
                lambda: ReflexivityOut.model_validate(
                    reflexivity_by_topology(complex_, settings)
                ),
            )
        polytopes = {
            w: self._summary(complex_, w, options, settings)
            for w in _whiches(options.which)
        }
        report = AnalysisReport(
            schema=settings.SCHEMA_VERSION,
            name=complex_.name,
            profile=ProfileOut.model_validate(profile),
            homology=[
                HomologyOut(
                    degree=j,
                    free_rank=g.free_rank,
                    torsion=list(g.torsion),
                    text=str(g),
                )
                for j, g in enumerate(table)
            ],
            reflexivity_by_topology=topology,
            polytopes=polytopes,
        )
        logger.info(
            "analyze",
            complex=complex_.name,
            which=options.which,
            elapsed_ms=_elapsed_ms(started),
        )
        return report

    def _summary(
        self,
        complex_: SimplicialComplex,
        which: str,
        options: AnalysisOptions,
        settings: Settings,
    ) -> PolytopeSummary:
        polytope = polytope_of(complex_, which)
        span = spanning_report(polytope.A)
        facets = None
        if not is_crosspolytope(polytope):
            facets = guarded("facets", lambda: facets_hull(polytope, settings))
        summary = PolytopeSummary(
            which=which,
            dim=polytope.rank,
            ambient_dim=polytope.ambient_dim,
            generators=polytope.n_columns,
            crosspolytope=is_crosspolytope(polytope),
            spanning=span.spanning,
            alpha_max=span.alpha_max,
            vertices=guarded("vertices", lambda: vertex_count(polytope, settings)),
            facet_count=self._facet_count(polytope, facets),
            reflexivity=guarded(
                "reflexivity",
                lambda: ReflexivityOut.model_validate(
                    is_reflexive(polytope, settings=settings)
                ),
            ),
            dual_dilation=guarded(
                "dual_dilation", lambda: dual_dilation_check(polytope, settings)
            ),
            model=self._model(complex_, which, options, settings),
        )
        if options.facets:
            listed = facets
            if listed is None:
                listed = guarded("facets", lambda: facets_hull(polytope, settings))
            if isinstance(listed, Skipped):
                summary.facets = listed
            else:
                summary.facets = [FacetOut.model_validate(f) for f in listed]
        if options.hilbert:
            report = guarded("idp", lambda: idp_report(polytope, settings=settings))
            if isinstance(report, Skipped):
                summary.idp = report
                hstar = report
            else:
                summary.idp = IDPOut(
                    idp=report.idp,
                    hilbert_numerator=list(report.hilbert_numerator),
                    idp_up_to=report.idp_up_to,
                    failing_k=report.failing_k,
                    witness_count=report.witness_count,
                    witnesses=[list(w) for w in report.witnesses],
                )
                hstar = report.hstar
        elif options.hstar:
            hstar = guarded("hstar", lambda: ehrhart_hstar(polytope, settings))
        else:
            hstar = None
        if isinstance(hstar, Skipped):
            summary.hstar = hstar
        elif hstar is not None:
            summary.hstar = list(hstar.coefficients)
            gamma = hstar.gamma()
            summary.gamma = list(gamma) if gamma is not None else None
        if options.groebner or options.triangulate:
            gb = guarded(
                "groebner", lambda: self._groebner_basis(polytope, options, settings)
            )
            if options.groebner:
                if isinstance(gb, Skipped):
                    summary.groebner = gb
                else:
                    summary.groebner = self._groebner_out(gb, options, settings)
            if options.triangulate:
                if isinstance(gb, Skipped):
                    summary.triangulation = gb
                else:
                    summary.triangulation = guarded(
                        "triangulation",
                        lambda: self._triangulation_out(
                            triangulation_from_gb(gb, settings)
                        ),
                    )
        return summary

    @staticmethod
    def _facet_count(polytope: CSPolytope, facets) -> Union[int, Skipped]:
        if is_crosspolytope(polytope):
            return 2**polytope.rank
        if not isinstance(facets, Skipped):
            return len(facets)
        if polytope.n_columns - polytope.rank == 1:
            # hull out of reach: count equal-weight partitions of the dependency
            (a,) = integer_kernel_basis(polytope.A, polytope.snf)
            return facet_count_corank1(a)
        return facets

    def _model(
        self,
        complex_: SimplicialComplex,
        which: str,
        options: AnalysisOptions,
        settings: Settings,
    ) -> Union[ModelOut, Skipped, None]:
        verdict = guarded(
            "model",
            lambda: model_polytope(
                complex_, which, want_hstar=options.hstar, settings=settings
            ),
        )
        if isinstance(verdict, Skipped):
            return None if verdict.skipped == NoApplicableRouteError.code else verdict
        model_fingerprint = None
        if verdict.model_fingerprint:
            model_fingerprint = FingerprintOut.model_validate(verdict.model_fingerprint)
        return ModelOut(
            route=verdict.route,
            model_name=verdict.model_name,
            fingerprint_match=verdict.fingerprint_match,
            fingerprint=FingerprintOut.model_validate(verdict.fingerprint),
            model_fingerprint=model_fingerprint,
            note=verdict.note,
        )

    @staticmethod
    def _triangulation_out(triangulation: Triangulation) -> TriangulationOut:
        return TriangulationOut(
            cells=len(triangulation.cells),
            normalized_volume=triangulation.normalized_volume,
            lattice_determinant=triangulation.lattice_determinant,
            unimodular=triangulation.unimodular,
            unimodular_in_spanned_lattice=triangulation.unimodular_in_spanned_lattice,
        )

    @staticmethod
    def _groebner_basis(
        polytope: CSPolytope, options: AnalysisOptions, settings: Settings
    ) -> GroebnerBasis:
        A = saturate(polytope.A, polytope.kind, settings)
        permutation = [p - 1 for p in options.permute] if options.permute else None
        return groebner_basis(A, permutation, settings=settings)

    @staticmethod
    def _groebner_out(
        gb: GroebnerBasis, options: AnalysisOptions, settings: Settings
    ) -> GroebnerOut:
        diagnostics = gb_diagnostics(gb)
        corank = gb.matrix.n_cols - integer_rank(gb.matrix.rows())
        trials = division_closure_trials(gb, seed=options.seed, settings=settings)
        listed = list(gb)[: settings.WITNESS_CAP]
        return GroebnerOut(
            binomial_count=len(gb),
            type_counts=diagnostics.type_counts,
            squarefree_leads=diagnostics.squarefree_leads,
            nonsquarefree_types=list(diagnostics.nonsquarefree_types),
            complete=gb.complete,
            rut_obstruction=rut_obstruction(gb.matrix) if corank == 1 else None,
            trials=trials.trials,
            trial_failures=trials.failures,
            seed=trials.seed,
            column_order=[c + 1 for c in gb.column_order],
            binomials=[BinomialOut(**b.to_dict(), text=str(b)) for b in listed],
        )

    def compare(
        self,
        first: SimplicialComplex,
        second: SimplicialComplex,
        which: str = COHOMOLOGY,
        want_hstar: bool = False,
        settings: Optional[Settings] = None,
    ) -> CompareReport:
        """Fingerprints of both polytopes plus the equivalence routes that apply."""
        settings = settings or self.settings

        def print_of(complex_: SimplicialComplex) -> Union[Fingerprint, Skipped]:
            return guarded(
                "fingerprint",
                lambda: fingerprint(polytope_of(complex_, which), want_hstar, settings),
            )

        prints: Dict[str, Union[Fingerprint, Skipped]] = {
            "first": print_of(first),
            "second": print_of(second),
        }
        agree = None
        differences: Dict[str, list] = {}
        if not any(isinstance(p, Skipped) for p in prints.values()):
            agree = prints["first"].agrees_with(prints["second"])
            differences = {
                k: list(v)
                for k, v in prints["first"].differences(prints["second"]).items()
            }
        isomorphic = None
        if first.is_pure and second.is_pure:
            isomorphic = guarded(
                "facet_ridge_isomorphic",
                lambda: facet_ridge_isomorphism(first, second, settings) is not None,
            )
        report = CompareReport(
            schema=settings.SCHEMA_VERSION,
            first=first.name,
            second=second.name,
            which=which,
            fingerprints={
                k: p if isinstance(p, Skipped) else FingerprintOut.model_validate(p)
                for k, p in prints.items()
            },
            fingerprints_agree=agree,
            differences=differences,
            facet_ridge_isomorphic=isomorphic,
            sphere_equivalence=self._sphere_route(first, second, which, isomorphic),
        )
        logger.info(
            "compare", first=first.name, second=second.name, which=which, agree=agree
        )
        return report

    @staticmethod
    def _sphere_route(
        first: SimplicialComplex, second: SimplicialComplex, which: str, isomorphic
    ) -> SphereEquivalenceOut:
        profiles = [classify(c) if c.dim >= 1 else None for c in (first, second)]
        if not all(p is not None and p.closed and p.orientable for p in profiles):
            return SphereEquivalenceOut(
                applicable=False, note="needs two closed orientable pseudomanifolds"
            )
        if which == HOMOLOGY:
            same = len(first.top_facets) == len(second.top_facets)
            return SphereEquivalenceOut(
                applicable=True,
                equivalent=same,
                note="homology polytopes are SEP(C_s); only the facet count matters",
            )
        if isinstance(isomorphic, Skipped) or isomorphic is None:
            return SphereEquivalenceOut(
                applicable=True, note="facet-ridge isomorphism not decided"
            )
        return SphereEquivalenceOut(
            applicable=True,
            equivalent=isomorphic,
            note=(
                "assumes both inputs are shellable spheres; "
                "equivalence iff facet-ridge graphs are isomorphic"
            ),
        )

    def sweep(
        self,
        complex_: SimplicialComplex,
        max_deleted: Optional[int] = None,
        settings: Optional[Settings] = None,
    ) -> SweepReport:
        settings = settings or self.settings
        entries = sweep_subcomplexes(complex_, max_deleted, settings)
        return SweepReport(
            schema=settings.SCHEMA_VERSION,
            name=complex_.name,
            entries=[
                SweepEntryOut(
                    deleted=[i + 1 for i in e.deleted],
                    reflexive=e.reflexive,
                    route=e.route,
                    skipped=e.skipped,
                )
                for e in entries
            ],
            reflexive=sum(1 for e in entries if e.reflexive),
            not_reflexive=sum(1 for e in entries if e.reflexive is False),
            skipped=sum(1 for e in entries if e.skipped),
        )


analysis_service = AnalysisService()
