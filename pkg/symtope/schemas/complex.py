from typing import Dict, List, Optional

from pydantic import Field, field_validator, model_validator

from symtope.schemas.common import BaseSchema
from symtope.services.complexes import Graph, SimplicialComplex, build_complex
from symtope.services.linalg import IntegerMatrix


def _positive_labels(values: List[int]) -> List[int]:
    if any(isinstance(v, bool) or v <= 0 for v in values):
        raise ValueError("vertex labels must be positive integers")
    return values


class ComplexFile(BaseSchema):
    name: Optional[str] = Field(None, description="Display name")
    facets: List[List[int]] = Field(
        ..., min_length=1, description="Facet list, 1-based vertex labels"
    )

    @field_validator("facets")
    @classmethod
    def check_facets(cls, v: List[List[int]]) -> List[List[int]]:
        for facet in v:
            if not facet:
                raise ValueError("empty facet")
            _positive_labels(facet)
        return v

    def to_complex(self) -> SimplicialComplex:
        return build_complex(self.facets, name=self.name)

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "ComplexFile":
        return cls(name=complex_.name, facets=[list(f) for f in complex_.facets])


class GraphFile(BaseSchema):
    name: Optional[str] = None
    vertices: List[int] = Field(default_factory=list)
    edges: List[List[int]] = Field(..., description="Edges as [a, b] pairs")

    @field_validator("edges")
    @classmethod
    def check_edges(cls, v: List[List[int]]) -> List[List[int]]:
        for edge in v:
            if len(edge) != 2 or edge[0] == edge[1]:
                raise ValueError(f"edge {edge} is not a pair of distinct vertices")
            _positive_labels(edge)
        return v

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.edges, self.vertices)

    def to_complex(self) -> SimplicialComplex:
        return self.to_graph().as_complex(self.name)


class RotationSystemFile(BaseSchema):
    rotation: Dict[str, List[int]] = Field(
        ..., description="vertex -> cyclic neighbour order"
    )

    def to_rotation(self) -> Dict[int, List[int]]:
        return {int(v): list(order) for v, order in self.rotation.items()}


class MatrixDump(BaseSchema):
    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    data: List[int]

    @model_validator(mode="after")
    def check_size(self) -> "MatrixDump":
        if len(self.data) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.data)}"
            )
        return self

    def to_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_dump(self.model_dump())

    @classmethod
    def from_matrix(cls, matrix: IntegerMatrix) -> "MatrixDump":
        return cls(**matrix.to_dump())
