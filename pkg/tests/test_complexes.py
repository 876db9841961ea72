"""Tests for simplicial complexes, boundary maps, homology and constructions"""

import random

import networkx as nx
import pytest

from symtope.core.errors import (
    DimensionError,
    InvalidComplexError,
    LabelCollisionError,
    NotPureError,
    SubcomplexError,
)
from symtope.services.complexes import (
    HomologyGroup,
    boundary_complex,
    boundary_map,
    build_complex,
    classify,
    complete_bipartite_graph,
    complete_graph,
    cone_over_graph,
    cycle_graph,
    facet_ridge_graph,
    homology,
    homology_table,
    path_graph,
    relabel,
    relative_homology,
    skeleton,
    stellar_subdivide,
    subcomplex,
    wheel_graph,
    whisker,
)
from tests.conftest import random_complex


@pytest.mark.parametrize(
    "name,f_vector",
    [
        ("rp2", (6, 15, 10)),
        ("bjorner", (6, 15, 11)),
        ("moore_z3", (9, 27, 19)),
        ("manifold_3_9_989", (9, 36, 54, 27)),
        ("tetra_boundary", (4, 6, 4)),
    ],
)
def test_f_vectors(builtin, name, f_vector):
    """Test face counts of the built-in complexes"""
    assert builtin(name).f_vector == f_vector


def test_build_complex_absorbs_contained_faces():
    complex_ = build_complex([(1, 2, 3), (2, 3), (3, 4)])
    assert complex_.facets == ((1, 2, 3), (3, 4))
    assert not complex_.is_pure
    assert complex_.top_facets == ((1, 2, 3),)


@pytest.mark.parametrize("facets", [[], [()], [(0, 1)], [(1, -2)]])
def test_build_complex_rejects_bad_input(facets):
    with pytest.raises(InvalidComplexError):
        build_complex(facets)


def test_single_triangle_boundary_column():
    """Rows are the edges 12, 13, 23 in lex order"""
    A = boundary_map(build_complex([(1, 2, 3)]), 2)
    assert A.shape == (3, 1)
    assert A.column(0) == (1, -1, 1)


def test_boundary_index_out_of_range(tetra):
    with pytest.raises(DimensionError):
        boundary_map(tetra, 4)
    with pytest.raises(DimensionError):
        boundary_map(tetra, -1)


def test_boundary_index_stops_at_dimension(tetra):
    """∂_{d+1} is not a map of the complex; homology still reaches degree d"""
    assert boundary_map(tetra, tetra.dim).shape == (6, 4)
    with pytest.raises(DimensionError):
        boundary_map(tetra, tetra.dim + 1)
    assert str(homology(tetra, tetra.dim)) == "Z"


def test_boundary_of_boundary_vanishes_on_fixtures(builtin):
    for name in ("rp2", "bjorner", "moore_z3", "manifold_3_9_989", "sphere_a"):
        complex_ = builtin(name)
        for j in range(1, complex_.dim):
            assert (boundary_map(complex_, j) @ boundary_map(complex_, j + 1)).is_zero()


def test_boundary_of_boundary_property():
    """∂_{j} ∘ ∂_{j+1} = 0 on random complexes"""
    rng = random.Random(42)
    for _ in range(100):
        complex_ = random_complex(rng)
        for j in range(1, complex_.dim):
            product = boundary_map(complex_, j) @ boundary_map(complex_, j + 1)
            assert product.is_zero()


def test_relative_boundary_map():
    two = build_complex([(1, 2, 3), (2, 3, 4)])
    A = boundary_map(two, 2, relative_to=boundary_complex(two))
    # only the shared edge 23 survives
    assert A.shape == (1, 2)


def test_relative_to_foreign_complex_raises(tetra):
    with pytest.raises(SubcomplexError):
        boundary_map(tetra, 2, relative_to=build_complex([(5, 6)]))


# Homology
def test_rp2_homology(rp2):
    assert homology(rp2, 1) == HomologyGroup(0, (2,))
    assert homology(rp2, 2).is_zero()
    assert str(homology(rp2, 1)) == "Z_2"


def test_bjorner_homology(bjorner):
    assert homology(bjorner, 1).is_zero()
    assert homology(bjorner, 2) == HomologyGroup(1)
    assert str(homology(bjorner, 2)) == "Z"


def test_moore_space_homology(builtin):
    assert homology(builtin("moore_z3"), 1) == HomologyGroup(0, (3,))


def test_homology_table_of_sphere(tetra):
    assert [str(h) for h in homology_table(tetra)] == ["Z", "0", "Z"]


def test_moebius_relative_homology(builtin):
    moebius = builtin("moebius_strip")
    assert relative_homology(moebius, boundary_complex(moebius), 2).is_zero()
    assert relative_homology(moebius, None, 1) == homology(moebius, 1)


def test_homology_degree_out_of_range(rp2):
    with pytest.raises(DimensionError):
        homology(rp2, 3)


def test_deleting_facets_kills_top_homology(builtin):
    """A 2-sphere with at least one facet removed has H_2 = 0"""
    sphere = builtin("sphere_a")
    s = len(sphere.top_facets)
    rng = random.Random(99)
    for _ in range(100):
        keep = sorted(rng.sample(range(s), rng.randint(1, s - 1)))
        assert homology(subcomplex(sphere, keep), 2).free_rank == 0


# Classification
def test_classify_rp2(rp2):
    profile = classify(rp2)
    assert profile.pseudomanifold
    assert profile.closed
    assert profile.orientable is False
    assert not profile.has_boundary


def test_classify_moebius_strip(builtin):
    profile = classify(builtin("moebius_strip"))
    assert profile.pseudomanifold
    assert not profile.closed
    assert profile.orientable is False
    assert len(profile.boundary_ridges) == 6
    assert sum(profile.free_ridge_count_per_facet) == 6


def test_classify_tetrahedron_boundary(tetra):
    profile = classify(tetra)
    assert profile.closed
    assert profile.orientable is True
    assert profile.strongly_connected


def test_classify_non_pure_complex():
    profile = classify(build_complex([(1, 2, 3), (3, 4)]))
    assert not profile.pure
    assert not profile.pseudomanifold
    assert profile.orientable is None


def test_facet_ridge_graph_of_tetrahedron(tetra):
    graph = facet_ridge_graph(tetra)
    assert nx.is_isomorphic(graph.to_networkx(), complete_graph(4).to_networkx())


def test_facet_ridge_graph_of_two_triangles(builtin):
    graph = facet_ridge_graph(builtin("two_triangles"))
    assert graph.vertices == (1, 2)
    assert graph.sorted_edges == [(1, 2)]


def test_facet_ridge_graph_needs_pure_complex():
    with pytest.raises(NotPureError):
        facet_ridge_graph(build_complex([(1, 2, 3), (3, 4)]))


def test_skeleton_and_boundary(tetra):
    assert skeleton(tetra, 1).f_vector == (4, 6)
    assert boundary_complex(tetra) is None
    assert boundary_complex(build_complex([(1, 2, 3)])).f_vector == (3, 3)


def test_relabel_rejects_collisions(tetra):
    with pytest.raises(InvalidComplexError):
        relabel(tetra, {1: 1, 2: 1, 3: 3, 4: 4})


# Graphs and constructions
def test_incidence_matrix_is_first_boundary():
    graph = cycle_graph(5)
    assert graph.incidence_matrix() == boundary_map(graph.as_complex(), 1)


def test_graph_families():
    assert complete_bipartite_graph(3, 3).n_edges == 9
    assert wheel_graph(4).n_edges == 8
    assert wheel_graph(4).degree(5) == 4
    assert path_graph(1).n_edges == 0
    with pytest.raises(InvalidComplexError):
        cycle_graph(2)


def test_cone_over_k33(builtin):
    cone = cone_over_graph(complete_bipartite_graph(3, 3))
    assert cone.f_vector == (7, 15, 9)
    assert cone == builtin("cone_k33")


def test_cone_apex_collision():
    with pytest.raises(LabelCollisionError):
        cone_over_graph(cycle_graph(4), apex=2)


def test_whiskered_edge_is_a_path():
    graph = whisker(path_graph(2), [1, 2])
    assert graph.n_vertices == 4
    assert nx.is_isomorphic(graph.to_networkx(), path_graph(4).to_networkx())


def test_whisker_rejects_unknown_vertex():
    with pytest.raises(InvalidComplexError):
        whisker(path_graph(2), [7])


def test_stellar_subdivision(builtin):
    manifold = builtin("manifold_3_9_989")
    subdivided = stellar_subdivide(manifold, (1, 2, 3, 4))
    assert len(subdivided.facets) == 30
    assert subdivided.vertices[-1] == 10
    assert subdivided == builtin("manifold_3_9_989_stellar")
    before = [str(h) for h in homology_table(manifold)]
    assert [str(h) for h in homology_table(subdivided)] == before


def test_stellar_subdivision_needs_a_facet(tetra):
    with pytest.raises(InvalidComplexError):
        stellar_subdivide(tetra, (1, 2))
