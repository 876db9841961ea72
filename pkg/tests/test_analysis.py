"""Tests for report assembly and guard skip records"""

from symtope.core.errors import GuardExceededError, NotOrientableError
from symtope.schemas import AnalysisOptions, Skipped
from symtope.services.analysis import analysis_service, guarded
from symtope.services.equivalence import CLOSED_CYCLE, CLOSED_FACET_RIDGE
from symtope.services.invariants import TORSION_PARITY


def test_guarded_passes_values_through():
    assert guarded("x", lambda: 3) == 3


def test_guarded_records_guard_trips():
    def trip():
        raise GuardExceededError("max_points", 50, 10)

    skipped = guarded("x", trip)
    reason = "max_points guard exceeded: predicted 50, limit 10"
    assert skipped == Skipped(skipped="max_points", reason=reason)
    assert skipped.is_guard


def test_guarded_records_domain_errors():
    def fail():
        raise NotOrientableError("not orientable")

    skipped = guarded("x", fail)
    assert skipped.skipped == "NOT_ORIENTABLE"
    assert not skipped.is_guard


def test_triangle_report(builtin):
    report = analysis_service.analyze(builtin("triangle"), AnalysisOptions(hstar=True))
    assert report.schema_ == "symtope/1"
    assert report.name == "triangle"
    assert [h.text for h in report.homology] == ["Z", "Z"]
    assert set(report.polytopes) == {"homology", "cohomology"}

    hexagon = report.polytopes["homology"]
    assert hexagon.dim == 2
    assert hexagon.vertices == 6
    assert hexagon.facet_count == 6
    assert hexagon.spanning
    assert hexagon.reflexivity.reflexive
    assert hexagon.hstar == [1, 4, 1]
    assert hexagon.gamma == [1, 2]
    assert hexagon.model.route == CLOSED_CYCLE
    assert hexagon.model.fingerprint_match

    assert report.polytopes["cohomology"].model.route == CLOSED_FACET_RIDGE


def test_rp2_report(rp2):
    options = AnalysisOptions(which="homology", facets=True)
    report = analysis_service.analyze(rp2, options)
    assert report.profile.closed
    assert report.profile.orientable is False
    assert [h.text for h in report.homology] == ["Z", "Z_2", "0"]
    assert report.reflexivity_by_topology.route == TORSION_PARITY
    assert list(report.polytopes) == ["homology"]

    summary = report.polytopes["homology"]
    assert summary.crosspolytope
    assert summary.facet_count == 1024
    assert not summary.spanning
    assert summary.alpha_max == 2
    assert summary.model is None
    assert len(summary.facets) == 1024
    assert all(isinstance(x, str) for x in summary.facets[0].normal)


def test_tight_guards_skip_fields(bjorner, tight_settings):
    """The corank-one count stands in for the hull"""
    options = AnalysisOptions(which="homology", groebner=True)
    report = analysis_service.analyze(bjorner, options, tight_settings)
    summary = report.polytopes["homology"]
    assert summary.facet_count == 672
    assert isinstance(summary.reflexivity, Skipped)
    assert summary.reflexivity.skipped == "max_hull_dim"
    assert isinstance(summary.groebner, Skipped)
    assert summary.groebner.is_guard


def test_requested_hilbert_under_guard(rp2, tight_settings):
    options = AnalysisOptions(which="homology", hilbert=True)
    report = analysis_service.analyze(rp2, options, tight_settings)
    summary = report.polytopes["homology"]
    assert isinstance(summary.idp, Skipped)
    assert summary.idp.is_guard
    assert summary.hstar == summary.idp
    assert summary.gamma is None


def test_groebner_and_triangulation(builtin):
    options = AnalysisOptions(which="homology", groebner=True, triangulate=True, seed=3)
    report = analysis_service.analyze(builtin("triangle"), options)
    summary = report.polytopes["homology"]
    groebner = summary.groebner
    assert groebner.complete
    assert groebner.squarefree_leads
    assert groebner.trial_failures == 0
    assert groebner.seed == 3
    assert groebner.column_order == [1, 2, 3]
    assert groebner.binomial_count == len(groebner.binomials)
    assert summary.triangulation.cells == 6
    assert summary.triangulation.unimodular


def test_report_serializes_with_schema_key(builtin):
    report = analysis_service.analyze(builtin("segment"))
    data = report.model_dump(mode="json", by_alias=True)
    assert data["schema"] == "symtope/1"
    assert "schema_" not in data


# Comparison
def test_compare_equal_cycles(builtin):
    report = analysis_service.compare(
        builtin("triangle"), builtin("cycle_3"), which="homology", want_hstar=True
    )
    assert report.fingerprints_agree
    assert report.differences == {}
    assert report.facet_ridge_isomorphic is True
    assert report.sphere_equivalence.applicable
    assert report.sphere_equivalence.equivalent


def test_compare_spheres(builtin):
    report = analysis_service.compare(builtin("sphere_a"), builtin("sphere_b"))
    assert report.which == "cohomology"
    assert report.facet_ridge_isomorphic is False
    assert report.sphere_equivalence.applicable
    assert report.sphere_equivalence.equivalent is False


def test_compare_sphere_homology_only_counts_facets(builtin):
    report = analysis_service.compare(
        builtin("sphere_a"), builtin("sphere_b"), which="homology"
    )
    assert report.sphere_equivalence.equivalent is True


def test_compare_needs_orientable_spheres(rp2, tetra):
    report = analysis_service.compare(rp2, tetra, which="homology")
    assert not report.sphere_equivalence.applicable
    assert report.sphere_equivalence.equivalent is None


# Sweep
def test_sweep_report(builtin):
    report = analysis_service.sweep(builtin("two_triangles"))
    assert [e.deleted for e in report.entries] == [[], [1], [2]]
    assert report.reflexive == 3
    assert report.not_reflexive == 0
    assert report.skipped == 0
