from typing import Dict, List, Optional, Union

from pydantic import Field, field_validator
from typing_extensions import Literal

from symtope.schemas.common import BaseSchema, Skipped, rationals
from symtope.schemas.complex import ComplexFile

Which = Literal["homology", "cohomology", "both"]


# Complex-level schemas
class HomologyOut(BaseSchema):
    degree: int
    free_rank: int
    torsion: List[int] = Field(default_factory=list)
    text: str


class ProfileOut(BaseSchema):
    dim: int
    f_vector: List[int]
    pure: bool
    pseudomanifold: bool
    closed: bool
    strongly_connected: bool
    orientable: Optional[bool] = None
    has_boundary: bool


# Polytope-level schemas
class FacetOut(BaseSchema):
    normal: List[str] = Field(
        ..., description="Ambient normal w with w·x = 1 on the facet"
    )
    vertex_indices: List[int] = Field(
        ..., description="Signed 1-based generator indices"
    )

    @field_validator("normal", mode="before")
    @classmethod
    def as_rationals(cls, v):
        return rationals(v)


class ReflexivityOut(BaseSchema):
    reflexive: bool
    route: str
    witnesses: List[List[str]] = Field(default_factory=list)

    @field_validator("witnesses", mode="before")
    @classmethod
    def as_rationals(cls, v):
        return rationals(v)


class IDPOut(BaseSchema):
    idp: bool
    hilbert_numerator: List[int]
    idp_up_to: int
    failing_k: Optional[int] = None
    witness_count: int = 0
    witnesses: List[List[int]] = Field(default_factory=list)


class BinomialOut(BaseSchema):
    type: str
    lead: Dict[str, int]
    trail: Dict[str, int]
    text: str


class GroebnerOut(BaseSchema):
    binomial_count: int
    type_counts: Dict[str, int]
    squarefree_leads: bool
    nonsquarefree_types: List[str] = Field(default_factory=list)
    complete: bool
    rut_obstruction: Optional[bool] = None
    trials: int
    trial_failures: int
    seed: int
    column_order: List[int]
    binomials: List[BinomialOut] = Field(default_factory=list)


class TriangulationOut(BaseSchema):
    cells: int
    normalized_volume: int
    lattice_determinant: int
    unimodular: bool
    unimodular_in_spanned_lattice: bool


class FingerprintOut(BaseSchema):
    dim: int
    vertex_count: int
    facet_count: Optional[int] = None
    normalized_volume: Optional[int] = None
    hstar: Optional[List[int]] = None


class ModelOut(BaseSchema):
    route: str
    model_name: Optional[str] = None
    fingerprint_match: bool
    fingerprint: FingerprintOut
    model_fingerprint: Optional[FingerprintOut] = None
    note: Optional[str] = None


class PolytopeSummary(BaseSchema):
    which: Literal["homology", "cohomology"]
    dim: int
    ambient_dim: int
    generators: int
    crosspolytope: bool
    spanning: bool
    alpha_max: int
    vertices: Union[int, Skipped]
    facet_count: Union[int, Skipped]
    facets: Union[List[FacetOut], Skipped, None] = None
    reflexivity: Union[ReflexivityOut, Skipped]
    dual_dilation: Union[bool, Skipped, None] = None
    hstar: Union[List[int], Skipped, None] = None
    gamma: Optional[List[int]] = None
    idp: Union[IDPOut, Skipped, None] = None
    groebner: Union[GroebnerOut, Skipped, None] = None
    triangulation: Union[TriangulationOut, Skipped, None] = None
    model: Union[ModelOut, Skipped, None] = None


class AnalysisReport(BaseSchema):
    schema_: str = Field(..., alias="schema", serialization_alias="schema")
    name: Optional[str] = None
    profile: ProfileOut
    homology: List[HomologyOut]
    reflexivity_by_topology: Union[ReflexivityOut, Skipped, None] = None
    polytopes: Dict[str, PolytopeSummary]

    model_config = {"from_attributes": True, "populate_by_name": True}


# Comparison schemas
class SphereEquivalenceOut(BaseSchema):
    applicable: bool
    equivalent: Optional[bool] = None
    note: str


class CompareReport(BaseSchema):
    schema_: str = Field(..., alias="schema", serialization_alias="schema")
    first: Optional[str] = None
    second: Optional[str] = None
    which: Literal["homology", "cohomology"]
    fingerprints: Dict[str, Union[FingerprintOut, Skipped]]
    fingerprints_agree: Optional[bool] = None
    differences: Dict[str, List[Optional[Union[int, List[int]]]]] = Field(
        default_factory=dict
    )
    facet_ridge_isomorphic: Union[bool, Skipped, None] = None
    sphere_equivalence: Optional[SphereEquivalenceOut] = None

    model_config = {"from_attributes": True, "populate_by_name": True}


# Sweep schemas
class SweepEntryOut(BaseSchema):
    deleted: List[int] = Field(
        ..., description="1-based indices of the deleted top facets"
    )
    reflexive: Optional[bool] = None
    route: Optional[str] = None
    skipped: Optional[str] = None


class SweepReport(BaseSchema):
    schema_: str = Field(..., alias="schema", serialization_alias="schema")
    name: Optional[str] = None
    entries: List[SweepEntryOut]
    reflexive: int
    not_reflexive: int
    skipped: int

    model_config = {"from_attributes": True, "populate_by_name": True}


# Corpus and request schemas
class CorpusEntry(BaseSchema):
    name: str
    description: str
    dim: int
    f_vector: List[int]


class CorpusList(BaseSchema):
    entries: List[CorpusEntry]


class AnalysisOptions(BaseSchema):
    which: Which = "both"
    hstar: bool = False
    hilbert: bool = False
    groebner: bool = False
    triangulate: bool = False
    facets: bool = False
    seed: int = 0
    permute: Optional[List[int]] = Field(
        None, description="1-based column order for the Gröbner basis"
    )


class AnalyzeRequest(BaseSchema):
    builtin: Optional[str] = None
    complex: Optional[ComplexFile] = None
    options: AnalysisOptions = Field(default_factory=AnalysisOptions)


class CompareRequest(BaseSchema):
    first: AnalyzeRequest
    second: AnalyzeRequest
    which: Literal["homology", "cohomology"] = "cohomology"
    hstar: bool = False
