"""Tests for spanning, reflexivity, Ehrhart and Hilbert invariants"""

import pytest

from symtope.core.config import Settings
from symtope.core.errors import GuardExceededError
from symtope.services.complexes import boundary_map, build_complex, complete_graph
from symtope.services.equivalence import sep_of_graph
from symtope.services.invariants import (
    ALL_DIVISORS_ONE,
    ENUMERATION,
    FIBRE,
    POLAR_INTEGRALITY,
    Q3_TORSION,
    TORSION_PARITY,
    HStarVector,
    counts_from_hstar,
    dual_dilation_check,
    ehrhart_calculator,
    ehrhart_hstar,
    hilbert_numerator,
    idp_report,
    is_reflexive,
    numerator_from_counts,
    reflexivity_by_topology,
    reflexivity_via_forests,
    spanning_report,
    sweep_subcomplexes,
)
from symtope.services.linalg import IntegerMatrix
from symtope.services.polytope import (
    cohomology_polytope,
    homology_polytope,
    lattice_points,
    polytope_from_matrix,
)


def test_spanning_reports(rp2, bjorner):
    """Test the largest elementary divisor decides spanning"""
    report = spanning_report(boundary_map(rp2, 2))
    assert not report.spanning
    assert report.alpha_max == 2
    assert report.not_idp
    assert spanning_report(boundary_map(bjorner, 2)).spanning


# Reflexivity
def test_rp2_is_reflexive_by_both_routes(rp2):
    P = homology_polytope(rp2)
    verdict = is_reflexive(P)
    assert verdict.reflexive
    assert verdict.route == TORSION_PARITY
    polar = is_reflexive(P, route=POLAR_INTEGRALITY)
    assert polar.reflexive
    assert polar.route == POLAR_INTEGRALITY


def test_moore_space_is_not_reflexive(builtin):
    P = homology_polytope(builtin("moore_z3"))
    verdict = is_reflexive(P)
    assert not verdict.reflexive
    assert verdict.route == Q3_TORSION
    assert verdict.witnesses
    polar = is_reflexive(P, route=POLAR_INTEGRALITY)
    assert not polar.reflexive
    assert polar.witnesses


def test_twisted_manifold_and_its_subdivision(builtin):
    """27 facets give an odd half-support; the stellar subdivision has 30"""
    manifold = homology_polytope(builtin("manifold_3_9_989"))
    verdict = is_reflexive(manifold)
    assert not verdict.reflexive
    assert verdict.route == TORSION_PARITY
    assert not is_reflexive(manifold, route=POLAR_INTEGRALITY).reflexive

    stellar = homology_polytope(builtin("manifold_3_9_989_stellar"))
    assert is_reflexive(stellar).reflexive
    assert is_reflexive(stellar, route=POLAR_INTEGRALITY).reflexive


def test_bjorner_is_reflexive_by_polar_integrality(bjorner):
    verdict = is_reflexive(homology_polytope(bjorner))
    assert verdict.reflexive
    assert verdict.route == POLAR_INTEGRALITY


def test_totally_unimodular_polytope_is_reflexive(tetra):
    P = cohomology_polytope(tetra)
    assert is_reflexive(P).reflexive


def test_unknown_route_is_rejected(rp2):
    with pytest.raises(ValueError):
        is_reflexive(homology_polytope(rp2), route="nonsense")


@pytest.mark.parametrize(
    "name,reflexive,route",
    [
        ("rp2", True, TORSION_PARITY),
        ("moore_z3", False, Q3_TORSION),
        ("manifold_3_9_989", False, TORSION_PARITY),
        ("manifold_3_9_989_stellar", True, TORSION_PARITY),
        ("moebius_strip", True, ALL_DIVISORS_ONE),
        ("bjorner", True, POLAR_INTEGRALITY),
    ],
)
def test_reflexivity_by_topology(builtin, name, reflexive, route):
    verdict = reflexivity_by_topology(builtin(name))
    assert verdict.reflexive is reflexive
    assert verdict.route == route


def test_topology_agrees_with_polytope_routes(builtin):
    names = ("rp2", "moore_z3", "manifold_3_9_989", "moebius_strip", "two_triangles")
    for name in names:
        complex_ = builtin(name)
        by_topology = reflexivity_by_topology(complex_).reflexive
        P = homology_polytope(complex_)
        assert by_topology == is_reflexive(P).reflexive
        assert by_topology == is_reflexive(P, route=POLAR_INTEGRALITY).reflexive


def test_forests_of_tetrahedron(tetra):
    report = reflexivity_via_forests(tetra)
    assert report.reflexive is True
    assert len(report.forests) == 4


def test_dual_dilation(builtin):
    """α_max times every polar vertex is integral"""
    for name in ("rp2", "moore_z3", "bjorner", "triangle"):
        assert dual_dilation_check(homology_polytope(builtin(name)))


# Ehrhart and Hilbert
def test_segment_hstar(builtin):
    hstar = ehrhart_hstar(homology_polytope(builtin("segment")))
    assert hstar.coefficients == (1, 1)
    assert hstar.normalized_volume == 2


def test_hexagon_hstar(builtin):
    P = homology_polytope(builtin("triangle"))
    hstar = ehrhart_hstar(P)
    assert hstar.coefficients == (1, 4, 1)
    assert hstar.normalized_volume == 6
    assert hstar.gamma() == (1, 2)
    assert hilbert_numerator(P) == (1, 4, 1)


def test_fibre_counts_match_enumeration(builtin):
    """Corank ≤ 1 counts agree with direct lattice point enumeration"""
    for name in ("triangle", "two_triangles", "tetra_boundary", "cycle_5"):
        P = homology_polytope(builtin(name))
        assert ehrhart_calculator.route(P) == FIBRE
        counts = ehrhart_calculator.ehrhart_function(P, 3)
        assert counts == [lattice_points(P, k) for k in range(4)]


def test_enumeration_route_on_sep_k4():
    """Corank three with mixed-sign lattice coordinates"""
    P = sep_of_graph(complete_graph(4))
    assert ehrhart_calculator.route(P) == ENUMERATION
    assert ehrhart_calculator.ehrhart_function(P, 3) == [1, 13, 55, 147]
    assert ehrhart_hstar(P).coefficients == (1, 9, 9, 1)
    assert hilbert_numerator(P) == (1, 9, 9, 1)


def test_numerator_transform_round_trip():
    hstar = (1, 12, 67, 232, 562, 1276, 562, 232, 67, 12, 1)
    counts = counts_from_hstar(hstar, 10, 10)
    assert numerator_from_counts(counts, 10) == hstar


def test_gamma_vector():
    assert HStarVector((1, 2, 1)).gamma() == (1, 0)
    assert HStarVector((1, 3, 1)).gamma() == (1, 1)
    assert HStarVector((1, 2, 3)).gamma() is None


def test_non_spanning_crosspolytope_is_not_idp():
    """(0,0,1) lies in 2P but z-coordinates of lattice points of P are 0 or ±2"""
    P = polytope_from_matrix(IntegerMatrix.from_rows([[1, 0, 1], [0, 1, 1], [0, 0, 2]]))
    assert lattice_points(P, 1) == 7
    report = idp_report(P, k_max=3)
    assert not report.idp
    assert report.failing_k == 2
    assert report.hilbert_counts[1] == report.ehrhart_counts[1]
    assert (0, 0, 1) in report.witnesses
    assert (0, 0, -1) in report.witnesses


def test_crosspolytope_is_idp():
    P = polytope_from_matrix(IntegerMatrix.identity(2))
    report = idp_report(P)
    assert report.idp
    assert report.hstar.coefficients == report.hilbert_numerator == (1, 2, 1)


def test_rp2_is_not_idp(rp2):
    report = idp_report(homology_polytope(rp2), k_max=5)
    assert not report.idp
    assert report.failing_k <= 5
    k = report.failing_k
    assert report.witness_count == report.ehrhart_counts[k] - report.hilbert_counts[k]


def test_hilbert_guard(rp2):
    with pytest.raises(GuardExceededError):
        ehrhart_calculator.sumsets(homology_polytope(rp2), 3, Settings(MAX_POINTS=50))


@pytest.mark.slow
def test_bjorner_ehrhart_and_hilbert(bjorner):
    """Coefficients listed from t^0 upwards"""
    report = idp_report(homology_polytope(bjorner))
    assert report.hstar.coefficients == (1, 12, 67, 232, 562, 1276, 562, 232, 67, 12, 1)
    assert report.hilbert_numerator == (1, 12, 67, 232, 562, 1024, 814, 232, 67, 12, 1)
    assert report.failing_k == 5
    assert report.witness_count == 252
    assert (-1, -1, 0, 1, 1, -1, 0, 0, 0, -1, -1, 0, 0, -1, 0) in report.witnesses


# Sweep
def test_sweep_of_two_triangles(builtin):
    entries = sweep_subcomplexes(builtin("two_triangles"))
    assert [e.deleted for e in entries] == [(), (0,), (1,)]
    assert all(e.reflexive for e in entries)


def test_sweep_of_rp2_respects_max_deleted(rp2):
    entries = sweep_subcomplexes(rp2, max_deleted=1)
    assert len(entries) == 11
    assert entries[0].deleted == ()
    assert entries[0].reflexive


def test_sweep_guard(rp2):
    with pytest.raises(GuardExceededError):
        sweep_subcomplexes(rp2, settings=Settings(MAX_BASES=5))


def test_sweep_order_does_not_depend_on_threads():
    disk = build_complex([(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6)])
    serial = sweep_subcomplexes(disk)
    threaded = sweep_subcomplexes(disk, settings=Settings(THREADS=4))
    assert threaded == serial
    assert len(serial) == 1 + 4 + 6 + 4


def test_sweep_of_small_disk():
    disk = build_complex([(1, 2, 3), (1, 3, 4), (1, 4, 5)])
    entries = sweep_subcomplexes(disk)
    assert len(entries) == 1 + 3 + 3
    assert all(e.reflexive and e.skipped is None for e in entries)
