"""
Planarity, rotation systems and planar duals.

A rotation system maps each vertex to the cyclic order of its neighbours.
Faces are traced dart by dart: after arriving at w along (v, w) the walk
leaves along (w, x) where x precedes v in the rotation at w.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import InvalidComplexError, NotPlanarError, check_guard
from symtope.services.complexes import Graph
from symtope.services.linalg import IntegerMatrix

logger = structlog.get_logger(__name__)

RotationSystem = Dict[int, List[int]]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class PlanarityReport:
    planar: bool
    rotation: Optional[RotationSystem] = field(default=None, compare=False)
    obstruction: Tuple[Edge, ...] = ()


@dataclass(frozen=True)
class DualGraph:
    """
    Planar dual as a multigraph: vertex i+1 is face i, and edge i crosses the
    i-th primal edge (primal edges in sorted order). Loops and parallel edges
    are kept.
    """

    faces: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(range(1, len(self.faces) + 1))

    @property
    def n_vertices(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def loops(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def incidence_matrix(self) -> IntegerMatrix:
        rows = [[0] * len(self.edges) for _ in self.faces]
        for c, (u, v) in enumerate(self.edges):
            if u != v:
                rows[u - 1][c] = -1
                rows[v - 1][c] = 1
        return IntegerMatrix.from_rows(rows, len(self.edges))

    def simple(self) -> Graph:
        return Graph.from_edges([e for e in self.edges if e[0] != e[1]], self.vertices)


def planarity(graph: Graph, settings: Optional[Settings] = None) -> PlanarityReport:
    """Planarity test; a non-planar graph comes back with a Kuratowski subgraph."""
    settings = resolve(settings)
    check_guard("max_graph_vertices", graph.n_vertices, settings.MAX_GRAPH_VERTICES)
    planar, certificate = nx.check_planarity(graph.to_networkx(), counterexample=True)
    if planar:
        rotation = {v: list(nbrs) for v, nbrs in certificate.get_data().items()}
        for v in graph.vertices:
            rotation.setdefault(v, [])
        report = PlanarityReport(True, rotation)
    else:
        obstruction = tuple(
            sorted((min(u, v), max(u, v)) for u, v in certificate.edges())
        )
        report = PlanarityReport(False, None, obstruction)
    logger.info(
        "planarity", vertices=graph.n_vertices, edges=graph.n_edges, planar=planar
    )
    return report


def is_planar(graph: Graph, settings: Optional[Settings] = None) -> bool:
    return planarity(graph, settings).planar


def planar_rotation_system(
    graph: Graph, settings: Optional[Settings] = None
) -> RotationSystem:
    report = planarity(graph, settings)
    if not report.planar:
        raise NotPlanarError(
            "graph has no planar embedding",
            detail=f"kuratowski subgraph edges: {list(report.obstruction)}",
        )
    return report.rotation


def _check_rotation(graph: Graph, rotation: RotationSystem) -> None:
    for v in graph.vertices:
        order = rotation.get(v, [])
        if sorted(order) != graph.neighbors(v):
            raise InvalidComplexError(
                f"rotation at vertex {v} is not an ordering of its neighbours"
            )


def trace_faces(graph: Graph, rotation: RotationSystem) -> List[Tuple[Edge, ...]]:
    """Faces of the embedding as cyclic lists of darts."""
    _check_rotation(graph, rotation)
    position = {v: {u: i for i, u in enumerate(order)} for v, order in rotation.items()}
    unused = {(u, v) for e in graph.sorted_edges for u, v in (e, e[::-1])}
    faces: List[Tuple[Edge, ...]] = []
    for start in sorted(unused):
        if start not in unused:
            continue
        face = []
        dart = start
        while dart in unused:
            unused.discard(dart)
            face.append(dart)
            v, w = dart
            order = rotation[w]
            dart = (w, order[(position[w][v] - 1) % len(order)])
        if dart != start:
            raise InvalidComplexError("rotation system does not close up into faces")
        faces.append(tuple(face))
    return faces


def planar_dual(graph: Graph, rotation: RotationSystem) -> DualGraph:
    """
    Dual of a connected plane graph. The rotation must describe a planar
    embedding, which is checked through Euler's formula V - E + F = 2.
    """
    if not graph.is_connected():
        raise InvalidComplexError("planar dual needs a connected graph")
    faces = trace_faces(graph, rotation)
    euler = graph.n_vertices - graph.n_edges + len(faces)
    if euler != 2:
        raise NotPlanarError(
            "rotation system is not a planar embedding",
            detail=f"V - E + F = {euler}",
        )
    face_of: Dict[Edge, int] = {}
    for i, face in enumerate(faces):
        for dart in face:
            face_of[dart] = i + 1
    edges = []
    for u, v in graph.sorted_edges:
        a, b = face_of[(u, v)], face_of[(v, u)]
        edges.append((min(a, b), max(a, b)))
    dual = DualGraph(tuple(tuple(d[0] for d in face) for face in faces), tuple(edges))
    logger.debug("planar_dual", faces=len(faces), edges=len(edges), loops=dual.loops)
    return dual

