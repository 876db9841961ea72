"""Simple graphs, viewed as 1-dimensional complexes, and the standard families."""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from symtope.core.errors import InvalidComplexError
from symtope.services.complexes.simplicial import SimplicialComplex, build_complex
from symtope.services.linalg import IntegerMatrix

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable[int]],
        vertices: Optional[Iterable[int]] = None,
    ) -> "Graph":
        normalized = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise InvalidComplexError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        verts = set(vertices or ()) | {x for e in normalized for x in e}
        if any(not isinstance(v, int) or v <= 0 for v in verts):
            raise InvalidComplexError("graph vertex labels must be positive integers")
        return cls(tuple(sorted(verts)), frozenset(normalized))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> List[int]:
        return sorted(u if w == v else w for u, w in self.edges if v in (u, w))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and nx.is_connected(self.to_networkx())

    def incidence_matrix(self) -> IntegerMatrix:
        """Signed vertex-edge incidence: column uv (u < v) is e_v - e_u, i.e. ∂_1."""
        index = {v: i for i, v in enumerate(self.vertices)}
        edges = self.sorted_edges
        rows = [[0] * len(edges) for _ in self.vertices]
        for c, (u, v) in enumerate(edges):
            rows[index[u]][c] = -1
            rows[index[v]][c] = 1
        return IntegerMatrix.from_rows(rows, len(edges))

    def as_complex(self, name: Optional[str] = None) -> SimplicialComplex:
        isolated = [(v,) for v in self.vertices if self.degree(v) == 0]
        return build_complex(self.sorted_edges + isolated, name=name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.sorted_edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        return cls.from_edges(g.edges(), g.nodes())

    def relabel(self, mapping: Dict[int, int]) -> "Graph":
        return Graph.from_edges(
            [(mapping[u], mapping[v]) for u, v in self.edges],
            [mapping[v] for v in self.vertices],
        )


def graph_of_complex(complex_: SimplicialComplex) -> Graph:
    """1-skeleton of a complex."""
    return Graph.from_edges(complex_.faces(1), complex_.vertices)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidComplexError("a cycle needs at least 3 vertices")
    return Graph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidComplexError("a path needs at least 1 vertex")
    return Graph.from_edges([(i, i + 1) for i in range(1, n)], range(1, n + 1))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(combinations(range(1, n + 1), 2), range(1, n + 1))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """Parts {1..p} and {p+1..p+q}."""
    return Graph.from_edges(
        [(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)],
        range(1, p + q + 1),
    )


def wheel_graph(n: int) -> Graph:
    """Cycle 1..n plus hub n+1 joined to every rim vertex."""
    rim = cycle_graph(n)
    return Graph.from_edges(list(rim.edges) + [(i, n + 1) for i in range(1, n + 1)])
