"""Tests for the built-in complex repository"""

import pytest

from symtope.core.errors import CorpusError
from symtope.corpus import FIXTURES, CorpusRepository, corpus_repository
from symtope.services.complexes import homology


def test_names_are_sorted():
    names = corpus_repository.names()
    assert names == sorted(FIXTURES)
    expected = {"rp2", "bjorner", "moore_z3", "sphere_a", "cycle_8", "segment"}
    assert expected <= set(names)


def test_every_fixture_builds_under_its_own_name():
    for name in corpus_repository.names():
        complex_ = corpus_repository.get(name)
        assert complex_.name == name
        assert complex_.f_vector[0] == len(complex_.vertices)


def test_builds_are_cached():
    assert corpus_repository.get("rp2") is corpus_repository.get("rp2")


def test_unknown_builtin():
    with pytest.raises(CorpusError) as exc:
        corpus_repository.get("klein_bottle")
    assert exc.value.code == "UNKNOWN_BUILTIN"
    assert "rp2" in exc.value.detail


def test_resolve_builtin_references():
    assert corpus_repository.resolve("builtin:triangle").f_vector == (3, 3)
    assert corpus_repository.resolve("triangle.json") is None


def test_get_multi_pages():
    page = corpus_repository.get_multi(skip=1, limit=2)
    assert [f.name for f in page] == corpus_repository.names()[1:3]
    assert len(corpus_repository.get_multi()) == len(FIXTURES)


def test_repository_over_a_custom_table():
    repository = CorpusRepository({"triangle": FIXTURES["triangle"]})
    assert repository.names() == ["triangle"]
    with pytest.raises(CorpusError):
        repository.get("rp2")


def test_bjorner_is_rp2_plus_one_facet(rp2, bjorner):
    """Adding 123 fills the torsion class and creates a 2-cycle"""
    assert set(rp2.facets) < set(bjorner.facets)
    assert set(bjorner.facets) - set(rp2.facets) == {(1, 2, 3)}
    assert homology(bjorner, 2).free_rank == 1
