"""Tests for the explicit toric Gröbner basis and what is read off it"""

import pytest

from symtope.core.config import Settings
from symtope.core.errors import (
    CorankError,
    GuardExceededError,
    IncompleteDependenciesError,
)
from symtope.services.complexes import boundary_map
from symtope.services.groebner import (
    TYPE_1A,
    TYPE_1B,
    TYPE_2,
    TYPE_3,
    TYPE_4,
    ToricVariable,
    degrevlex,
    division_closure_trials,
    gb_diagnostics,
    groebner_basis,
    initial_ideal_dichotomy,
    is_toric_member,
    normal_form,
    rut_obstruction,
    saturate,
    standard_monomial_counts,
    triangulation_from_gb,
)
from symtope.services.linalg import IntegerMatrix
from symtope.services.polytope import COHOMOLOGY, HOMOLOGY


def _top(complex_):
    return boundary_map(complex_, complex_.dim)


def test_toric_variable_numbering():
    assert ToricVariable.from_name("z").index == 0
    assert ToricVariable.from_name("x+3").index == 5
    assert ToricVariable.from_index(6).name == "x-3"
    assert ToricVariable.from_index(5).bar().name == "x-3"
    with pytest.raises(ValueError):
        ToricVariable.from_name("y1")


def test_degrevlex_prefers_fewer_origin_factors():
    # x+1·x-1 versus z²
    assert degrevlex.greater((0, 1, 1), (2, 0, 0))
    assert degrevlex.greater((0, 0, 0, 2), (0, 1, 1, 0))
    assert degrevlex.compare((1, 0, 0), (1, 0, 0)) == 0


def test_trivial_kernel_gives_only_type_4(rp2):
    """Test P_rp2 is a crosspolytope so only x+·x- - z² remains"""
    gb = groebner_basis(_top(rp2))
    assert gb.complete
    assert len(gb) == 10
    assert {b.btype for b in gb} == {TYPE_4}
    assert all(b.lead_squarefree for b in gb)
    assert str(gb.binomials[0]) == "x+1*x-1 - z^2"


def test_odd_dependency_gives_type_2(builtin):
    gb = groebner_basis(_top(builtin("triangle")))
    assert gb.of_type(TYPE_2)
    assert not gb.of_type(TYPE_3)
    assert gb_diagnostics(gb).squarefree_leads


def test_unit_even_dependency(tetra):
    gb = groebner_basis(_top(tetra))
    diagnostics = gb_diagnostics(gb)
    assert diagnostics.unit_dependencies
    assert diagnostics.squarefree_leads
    assert gb.of_type(TYPE_1A) and gb.of_type(TYPE_1B)
    assert not rut_obstruction(_top(tetra))


def test_bjorner_has_a_non_squarefree_lead(bjorner):
    A = _top(bjorner)
    gb = groebner_basis(A)
    type_3 = gb.of_type(TYPE_3)
    assert type_3
    assert any(not b.lead_squarefree for b in type_3)
    diagnostics = gb_diagnostics(gb)
    assert not diagnostics.squarefree_leads
    assert TYPE_3 in diagnostics.nonsquarefree_types
    assert not diagnostics.unit_dependencies
    assert rut_obstruction(A)


def test_bjorner_dichotomy(bjorner):
    report = initial_ideal_dichotomy(_top(bjorner))
    assert report.applicable
    assert report.pivot == 0
    assert len(report.branches) == 4
    assert report.holds


def test_dichotomy_needs_an_entry_above_one(tetra):
    report = initial_ideal_dichotomy(_top(tetra))
    assert not report.applicable
    assert not report.holds


def test_rut_obstruction_needs_corank_one(rp2):
    with pytest.raises(CorankError):
        rut_obstruction(_top(rp2))


@pytest.mark.parametrize("name", ["triangle", "tetra_boundary", "rp2", "bjorner"])
def test_binomials_lie_in_the_toric_ideal(builtin, name):
    gb = groebner_basis(_top(builtin(name)))
    assert all(is_toric_member(b, gb.matrix) for b in gb)


@pytest.mark.parametrize("name", ["triangle", "tetra_boundary", "rp2", "bjorner"])
def test_division_closure(builtin, name):
    """Random ideal members reduce to a common normal form"""
    gb = groebner_basis(_top(builtin(name)))
    report = division_closure_trials(gb, seed=7, trials=1000)
    assert report.trials == 1000
    assert report.failures == 0
    assert report.passed


def test_normal_form_is_standard(builtin):
    gb = groebner_basis(_top(builtin("triangle")))
    square = tuple(2 if i in (1, 2) else 0 for i in range(gb.n_vars))
    reduced = normal_form(square, gb.binomials)
    assert reduced == (4, 0, 0, 0, 0, 0, 0)


def test_standard_monomials_count_lattice_points(builtin):
    gb = groebner_basis(_top(builtin("triangle")))
    assert standard_monomial_counts(gb, 3) == [1, 7, 19, 37]


def test_permuted_column_order(tetra):
    A = _top(tetra)
    gb = groebner_basis(A, permutation=[3, 2, 1, 0])
    assert gb.column_order == (3, 2, 1, 0)
    assert gb.matrix == A.select_columns([3, 2, 1, 0])
    assert all(is_toric_member(b, gb.matrix) for b in gb)
    with pytest.raises(ValueError):
        groebner_basis(A, permutation=[0, 0, 1, 2])


def test_incomplete_dependencies_are_refused():
    A = IntegerMatrix.from_rows([[1, 1, 2, 0], [0, 1, 1, 3]])
    with pytest.raises(IncompleteDependenciesError):
        groebner_basis(A)
    gb = groebner_basis(A, allow_incomplete=True)
    assert not gb.complete


def test_binomial_guard(bjorner):
    with pytest.raises(GuardExceededError):
        groebner_basis(_top(bjorner), settings=Settings(MAX_CELLS=10))


def test_saturation_adds_missing_points():
    assert saturate(IntegerMatrix.from_rows([[2]])) == IntegerMatrix.from_rows([[2, 1]])


def test_boundary_matrices_are_only_reduced(rp2, builtin):
    A = _top(rp2)
    assert saturate(A, HOMOLOGY) == A
    coboundary = _top(builtin("two_triangles")).transpose()
    assert saturate(coboundary, COHOMOLOGY).n_cols == 3


# Triangulations
def test_segment_triangulation(builtin):
    triangulation = triangulation_from_gb(groebner_basis(_top(builtin("segment"))))
    assert len(triangulation.cells) == 2
    assert triangulation.unimodular
    assert triangulation.normalized_volume == 2


def test_hexagon_triangulation(builtin):
    triangulation = triangulation_from_gb(groebner_basis(_top(builtin("triangle"))))
    assert len(triangulation.cells) == 6
    assert triangulation.normalized_volume == 6
    assert triangulation.unimodular
    assert all("z" in names for names in triangulation.cell_names())


def test_rp2_triangulation(rp2):
    """Cells are unimodular only in the lattice spanned by the columns"""
    triangulation = triangulation_from_gb(groebner_basis(_top(rp2)))
    assert len(triangulation.cells) == 1024
    assert triangulation.lattice_determinant == 2
    assert sum(triangulation.volumes) == triangulation.normalized_volume
    assert not triangulation.unimodular
    assert triangulation.unimodular_in_spanned_lattice
