"""Tests for settings and the input/output schemas"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from symtope.core.config import Settings, resolve, settings
from symtope.schemas import (
    ApiResponse,
    ComplexFile,
    FacetOut,
    GraphFile,
    MatrixDump,
    ReflexivityOut,
    RotationSystemFile,
    Skipped,
)
from symtope.schemas.common import rationals
from symtope.services.linalg import IntegerMatrix


# Settings
def test_settings_defaults():
    defaults = Settings()
    assert defaults.SCHEMA_VERSION == "symtope/1"
    assert defaults.MAX_HULL_DIM == 12
    assert defaults.MAX_POINTS == 2_000_000
    assert defaults.GB_TRIALS == 1000


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("SYMTOPE_MAX_POINTS", "1234")
    monkeypatch.setenv("SYMTOPE_LOG_LEVEL", "debug")
    configured = Settings()
    assert configured.MAX_POINTS == 1234
    assert configured.LOG_LEVEL == "DEBUG"


def test_guards_must_be_positive():
    with pytest.raises(ValidationError):
        Settings(MAX_CELLS=0)


def test_resolve_prefers_explicit_settings():
    explicit = Settings(MAX_BASES=3)
    assert resolve(explicit) is explicit
    assert resolve(None) is settings


# Rationals
def test_rationals_are_strings():
    assert rationals([Fraction(1, 2), 3, Fraction(-4, 2)]) == ["1/2", "3", "-2"]
    assert rationals([[Fraction(2, 3)], []]) == [["2/3"], []]
    assert rationals("x") == "x"


def test_facet_normals_serialize_as_rationals():
    facet = FacetOut(normal=[Fraction(1, 2), Fraction(0), -1], vertex_indices=[1, -2])
    assert facet.normal == ["1/2", "0", "-1"]


def test_reflexivity_witnesses():
    out = ReflexivityOut(
        reflexive=False,
        route="q>=3-torsion",
        witnesses=[(Fraction(1, 3), Fraction(2, 3))],
    )
    assert out.witnesses == [["1/3", "2/3"]]


# Input files
def test_complex_file_round_trip(rp2):
    dumped = ComplexFile.from_complex(rp2)
    assert dumped.name == "rp2"
    assert dumped.to_complex() == rp2


@pytest.mark.parametrize("facets", [[], [[]], [[0, 1]], [[1, -1]]])
def test_complex_file_rejects_bad_facets(facets):
    with pytest.raises(ValidationError):
        ComplexFile(facets=facets)


def test_graph_file():
    graph = GraphFile(edges=[[1, 2], [2, 3], [3, 1]]).to_graph()
    assert graph.n_vertices == 3
    assert graph.n_edges == 3
    with pytest.raises(ValidationError):
        GraphFile(edges=[[1, 1]])
    with pytest.raises(ValidationError):
        GraphFile(edges=[[1, 2, 3]])


def test_rotation_system_file():
    rotation = RotationSystemFile(rotation={"1": [2, 3], "2": [1]}).to_rotation()
    assert rotation == {1: [2, 3], 2: [1]}


def test_matrix_dump():
    A = IntegerMatrix.from_rows([[1, -1, 0], [0, 1, -1]])
    dump = MatrixDump.from_matrix(A)
    assert dump.rows == 2 and dump.cols == 3
    assert dump.data == [1, -1, 0, 0, 1, -1]
    assert dump.to_matrix() == A
    with pytest.raises(ValidationError):
        MatrixDump(rows=2, cols=2, data=[1, 2, 3])


# Envelope
def test_api_response_meta():
    response = ApiResponse[Skipped](data=Skipped(skipped="max_points"))
    assert response.meta.schema_version == "symtope/1"
    assert response.data.is_guard
    assert not Skipped(skipped="NOT_ORIENTABLE").is_guard
