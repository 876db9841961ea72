"""Tests for centrally symmetric polytopes, their facets and lattice points"""

import random
from fractions import Fraction
from itertools import product

import pytest

from symtope.core.config import Settings
from symtope.core.errors import DimensionError, GuardExceededError, NotPrimitiveError
from symtope.services.complexes import boundary_map, build_complex, complete_graph
from symtope.services.equivalence import sep_of_graph
from symtope.services.linalg import IntegerMatrix, integer_kernel_basis
from symtope.services.polytope import (
    FRACTIONAL,
    FULL,
    ZERO,
    FacetLabeling,
    affine_hull_basis,
    classify_facet,
    cohomology_polytope,
    crosspolytope_facet,
    equal_weight_partition_count,
    expected_cohomology_vertices,
    facet_count_closed_orientable,
    facet_count_corank1,
    facet_labeling,
    facets_hull,
    homology_polytope,
    is_crosspolytope,
    lattice_points,
    normalized_volume,
    polar_vertex,
    polytope_from_matrix,
    vertex_count,
    verify_spanning_forest,
)
from tests.conftest import random_matrix


def test_rp2_homology_polytope(rp2):
    """Test P_rp2 is a 10-dimensional crosspolytope in R^15"""
    P = homology_polytope(rp2)
    assert P.ambient_dim == 15
    assert P.rank == 10
    assert is_crosspolytope(P)
    assert vertex_count(P) == 20
    assert len(facets_hull(P)) == 1024


def test_tetrahedron_polytopes(tetra):
    P = homology_polytope(tetra)
    assert P.rank == 3
    assert len(facets_hull(P)) == facet_count_closed_orientable(4) == 6

    Q = cohomology_polytope(tetra)
    assert Q.rank == 3
    assert vertex_count(Q) == 12 == expected_cohomology_vertices(tetra)
    # cuboctahedron: 8 triangles and 6 squares
    assert len(facets_hull(Q)) == 14


def test_cone_over_k33_cohomology(builtin):
    complex_ = builtin("cone_k33")
    Q = cohomology_polytope(complex_)
    assert Q.rank == 9
    assert vertex_count(Q) == 30 == expected_cohomology_vertices(complex_)


def test_repeated_free_ridges_collapse(builtin):
    complex_ = builtin("two_triangles")
    Q = cohomology_polytope(complex_)
    assert Q.n_columns == 3
    assert vertex_count(Q) == 6 == expected_cohomology_vertices(complex_)
    assert len(facets_hull(Q)) == 6


@pytest.mark.parametrize(
    "name,which,dim",
    [
        ("bjorner", "homology", 10),
        ("skeleton_3_6", "homology", 20),
        ("sphere_a", "cohomology", 13),
        ("moore_z3", "homology", 19),
    ],
)
def test_dimension_is_rank_of_top_boundary(builtin, name, which, dim):
    complex_ = builtin(name)
    build = homology_polytope if which == "homology" else cohomology_polytope
    P = build(complex_)
    assert P.rank == dim


def test_antipodal_columns_are_merged():
    P = polytope_from_matrix(IntegerMatrix.from_rows([[1, -1]]))
    assert P.n_columns == 1
    assert P.column_map == (1, -1)
    assert vertex_count(P) == 2


def test_zero_columns_are_dropped():
    P = polytope_from_matrix(IntegerMatrix.from_rows([[1, 0, 1], [0, 0, 1]]))
    assert P.column_map == (1, 0, 2)
    assert P.n_columns == 2


def test_zero_matrix_is_rejected():
    with pytest.raises(DimensionError):
        polytope_from_matrix(IntegerMatrix.zeros(2, 2))


def test_zero_dimensional_complex_is_rejected():
    with pytest.raises(DimensionError):
        homology_polytope(build_complex([(1,), (2,)]))


# Facets
def test_triangle_hexagon(builtin):
    """P_Δ of the 3-cycle is a hexagon"""
    P = homology_polytope(builtin("triangle"))
    facets = facets_hull(P)
    assert P.rank == 2
    assert vertex_count(P) == 6
    assert len(facets) == 6
    for facet in facets:
        values = [
            sum(w * x for w, x in zip(facet.normal, col)) for col in P.A.columns()
        ]
        assert max(abs(v) for v in values) == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_facet_counts(builtin, n):
    P = homology_polytope(builtin(f"cycle_{n}"))
    assert len(facets_hull(P)) == facet_count_closed_orientable(n)


def test_closed_orientable_formula():
    counts = [facet_count_closed_orientable(s) for s in (2, 3, 4, 5, 6)]
    assert counts == [2, 6, 6, 30, 20]


def test_bjorner_facet_count(bjorner):
    """Hull facets agree with the corank-one partition count"""
    P = homology_polytope(bjorner)
    (a,) = integer_kernel_basis(P.A)
    assert facet_count_corank1(a) == 672
    assert len(facets_hull(P)) == 672


def test_corank1_count_needs_primitive_vector():
    with pytest.raises(NotPrimitiveError):
        facet_count_corank1((2, 4, 2))


def test_equal_weight_partitions():
    assert equal_weight_partition_count([1, 1]) == 2
    assert equal_weight_partition_count([1, 1, 2]) == 2
    assert equal_weight_partition_count([1, 1, 1, 1]) == 6
    assert equal_weight_partition_count([1]) == 0
    assert equal_weight_partition_count([]) == 1


def test_hull_guards(rp2):
    P = homology_polytope(rp2)
    with pytest.raises(GuardExceededError) as exc:
        facets_hull(P, Settings(MAX_HULL_DIM=4))
    assert exc.value.guard == "max_hull_dim"


# Labelings
def test_rp2_labelings_support_spanning_forests(rp2):
    P = homology_polytope(rp2)
    for facet in facets_hull(P)[:128]:
        labeling = facet_labeling(P, facet)
        assert labeling.max_label == 1
        assert verify_spanning_forest(rp2, labeling)


def test_bjorner_labelings(bjorner):
    P = homology_polytope(bjorner)
    kinds = set()
    for facet in facets_hull(P):
        labeling = facet_labeling(P, facet)
        assert labeling.max_label == 1
        assert verify_spanning_forest(bjorner, labeling)
        kind, _ = classify_facet(labeling)
        kinds.add(kind)
    assert FULL in kinds or ZERO in kinds


def test_classify_facet_cases():
    one, half = Fraction(1), Fraction(1, 2)
    assert classify_facet(FacetLabeling((one, -one, one), ())) == (FULL, None)
    assert classify_facet(FacetLabeling((one, Fraction(0), -one), ())) == (ZERO, 1)
    assert classify_facet(FacetLabeling((half, one, one), ())) == (FRACTIONAL, 0)
    with pytest.raises(ValueError):
        classify_facet(FacetLabeling((half, half, one), ()))


# Polar vertices
def test_rp2_polar_vertices_are_integral(rp2):
    P = homology_polytope(rp2)
    for facet in facets_hull(P)[:64]:
        vertex = polar_vertex(P, facet)
        assert vertex.integral
        lifted = [
            sum(x * c for x, c in zip(vertex.lift, P.signed_column(i)))
            for i in facet.vertex_indices
        ]
        assert lifted == [1] * len(facet.vertex_indices)


def test_moore_space_has_a_fractional_polar_vertex(builtin):
    P = homology_polytope(builtin("moore_z3"))
    r = P.rank
    flips = [tuple(-1 if i == k else 1 for i in range(r)) for k in range(r)]
    signs = [(1,) * r] + flips
    integral = [polar_vertex(P, crosspolytope_facet(P, b)).integral for b in signs]
    assert not all(integral)


# Lattice points and volume
def test_lattice_points_of_rp2(rp2):
    P = homology_polytope(rp2)
    assert lattice_points(P, 0) == 1
    assert lattice_points(P, 1) == 21


def test_lattice_points_of_bjorner(bjorner):
    assert lattice_points(homology_polytope(bjorner), 1) == 23


def test_lattice_points_of_hexagon(builtin):
    P = homology_polytope(builtin("triangle"))
    assert [lattice_points(P, k) for k in range(4)] == [1, 7, 19, 37]
    assert normalized_volume(P) == 6


def _box_count(P, k):
    """Lattice points of kP by filtering the coordinate box through the facets"""
    facets = facets_hull(P)
    radii = [max(abs(u[j]) for u in P.column_coords) for j in range(P.rank)]
    box = [range(-k * m, k * m + 1) for m in radii]

    def inside(u):
        return all(sum(w * x for w, x in zip(f.coords, u)) <= k for f in facets)

    return sum(1 for u in product(*box) if inside(u))


@pytest.mark.parametrize(
    "rows",
    [
        [[1, 0, 1], [0, 1, 1], [0, 0, 2]],
        [[1, 1, 2, 0], [0, 1, 1, 3]],
        [[1, -1, 0, 2], [0, 1, -1, 1], [1, 0, 1, -1]],
        [[2, -1, 1, 0, 1], [-1, 2, 0, 1, -1]],
    ],
)
def test_lattice_points_match_box_count(rows):
    P = polytope_from_matrix(IntegerMatrix.from_rows(rows))
    expected = [_box_count(P, k) for k in range(3)]
    assert [lattice_points(P, k) for k in range(3)] == expected


def test_lattice_points_of_random_matrices_match_box_count():
    rng = random.Random(11)
    checked = 0
    while checked < 12:
        A = random_matrix(rng, max_rows=3, max_cols=4, bound=2)
        if A.is_zero():
            continue
        P = polytope_from_matrix(A)
        assert lattice_points(P, 2) == _box_count(P, 2)
        checked += 1


def test_lattice_points_of_sep_k4():
    """Test mixed-sign coordinates at corank three"""
    P = sep_of_graph(complete_graph(4))
    assert P.n_columns - P.rank == 3
    assert [lattice_points(P, k) for k in range(3)] == [1, 13, 55]
    assert [_box_count(P, k) for k in range(3)] == [1, 13, 55]


def test_negative_dilation_is_rejected(rp2):
    with pytest.raises(ValueError):
        lattice_points(homology_polytope(rp2), -1)


def test_affine_hull_is_orthogonal_to_cokernel(builtin):
    """Hull basis vectors are orthogonal to ker Aᵀ"""
    for name in ("rp2", "bjorner", "moebius_strip", "two_triangles"):
        complex_ = builtin(name)
        for P in (homology_polytope(complex_), cohomology_polytope(complex_)):
            cokernel = integer_kernel_basis(P.A.transpose())
            basis = affine_hull_basis(P)
            assert len(basis) == P.rank
            for b in basis:
                assert all(sum(x * y for x, y in zip(b, v)) == 0 for v in cokernel)


def test_homology_boundary_matches_polytope_source(rp2):
    assert homology_polytope(rp2).source == boundary_map(rp2, 2)
