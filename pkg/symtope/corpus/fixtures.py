"""Built-in complexes, keyed by name. Vertex labels are 1-based."""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Sequence

from symtope.services.complexes import (
    SimplicialComplex,
    build_complex,
    complete_bipartite_graph,
    complete_graph,
    cone_over_graph,
    cycle_graph,
    path_graph,
    stellar_subdivide,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: Callable[[], SimplicialComplex]


def _parse(facets: Sequence[str]) -> List[List[int]]:
    return [[int(c) for c in f] for f in facets]


RP2 = ("125", "126", "134", "136", "145", "234", "235", "246", "356", "456")

MANIFOLD_3_9_989 = (
    "1234", "1235", "1246", "1257", "1268", "1278", "1345", "1456", "1567",
    "1679", "1689", "1789", "2349", "2359", "2456", "2459", "2567", "2678",
    "3458", "3478", "3479", "3589", "3678", "3679", "3689", "4589", "4789",
)  # fmt: skip

# disc with a 9-gon boundary wound three times around the circle 1-2-3
MOORE_Z3 = (
    "124", "234", "345", "135", "156", "126", "236", "367", "137", "178",
    "128", "238", "389", "139", "149", "456", "678", "489", "468",
)  # fmt: skip

SPHERE_A = (
    "123", "125", "136", "159", "168", "189", "234",
    "245", "347", "367", "459", "478", "489", "678",
)  # fmt: skip
SPHERE_B = (
    "123", "124", "135", "145", "237", "248", "279",
    "289", "356", "367", "456", "467", "478", "789",
)  # fmt: skip


def _from(facets: Sequence[str], name: str) -> Callable[[], SimplicialComplex]:
    return lambda: build_complex(_parse(facets), name=name)


def _stellar() -> SimplicialComplex:
    base = build_complex(_parse(MANIFOLD_3_9_989), name="manifold_3_9_989")
    return stellar_subdivide(
        base, (1, 2, 3, 4), new_vertex=10, name="manifold_3_9_989_stellar"
    )


def _cycle(n: int) -> Fixture:
    name = f"cycle_{n}"
    return Fixture(name, f"cycle graph C_{n}", lambda: cycle_graph(n).as_complex(name))


FIXTURES: Dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture("rp2", "6-vertex real projective plane", _from(RP2, "rp2")),
        Fixture("bjorner", "rp2 plus the facet 123", _from(RP2 + ("123",), "bjorner")),
        Fixture(
            "moebius_strip",
            "Möbius strip, non-orientable with boundary",
            _from(("124", "135", "136", "146", "235", "245"), "moebius_strip"),
        ),
        Fixture(
            "moore_z3",
            "Moore space with H_1 = Z_3, f = (9, 27, 19)",
            _from(MOORE_Z3, "moore_z3"),
        ),
        Fixture(
            "manifold_3_9_989",
            "9-vertex twisted S^2 x S^1",
            _from(MANIFOLD_3_9_989, "manifold_3_9_989"),
        ),
        Fixture(
            "manifold_3_9_989_stellar",
            "manifold_3_9_989 with facet 1234 subdivided",
            _stellar,
        ),
        Fixture(
            "sphere_a",
            "2-sphere with triangle-free facet-ridge graph",
            _from(SPHERE_A, "sphere_a"),
        ),
        Fixture(
            "sphere_b",
            "2-sphere whose facet-ridge graph has a triangle",
            _from(SPHERE_B, "sphere_b"),
        ),
        Fixture(
            "skeleton_3_6",
            "3-skeleton of the 6-simplex",
            lambda: build_complex(combinations(range(1, 8), 4), name="skeleton_3_6"),
        ),
        Fixture(
            "tetra_boundary",
            "boundary of the tetrahedron",
            _from(("123", "124", "134", "234"), "tetra_boundary"),
        ),
        Fixture(
            "triangle",
            "boundary of a triangle (C_3)",
            _from(("12", "13", "23"), "triangle"),
        ),
        Fixture(
            "two_triangles",
            "two triangles glued along an edge",
            _from(("123", "234"), "two_triangles"),
        ),
        Fixture(
            "cone_k33",
            "cone over K_{3,3} with apex 7",
            lambda: cone_over_graph(
                complete_bipartite_graph(3, 3), apex=7, name="cone_k33"
            ),
        ),
        Fixture(
            "cone_c4",
            "cone over C_4 with apex 5",
            lambda: cone_over_graph(cycle_graph(4), apex=5, name="cone_c4"),
        ),
        *[_cycle(n) for n in range(3, 9)],
        Fixture("k4", "complete graph K_4", lambda: complete_graph(4).as_complex("k4")),
        Fixture(
            "segment", "a single edge", lambda: path_graph(2).as_complex("segment")
        ),
    ]
}
