"""Shared fixtures and generators for the test suite"""

import random
from itertools import combinations
from typing import List

import pytest
from sympy import Matrix

from symtope.core.config import Settings
from symtope.corpus import corpus_repository
from symtope.services.complexes import SimplicialComplex, build_complex
from symtope.services.linalg import IntegerMatrix


@pytest.fixture
def builtin():
    """Look up a built-in complex by name"""
    return corpus_repository.get


@pytest.fixture
def rp2() -> SimplicialComplex:
    return corpus_repository.get("rp2")


@pytest.fixture
def bjorner() -> SimplicialComplex:
    return corpus_repository.get("bjorner")


@pytest.fixture
def tetra() -> SimplicialComplex:
    return corpus_repository.get("tetra_boundary")


@pytest.fixture
def tight_settings() -> Settings:
    """Settings with small guards so that skip paths are reachable"""
    return Settings(MAX_POINTS=10, MAX_HULL_DIM=2, MAX_MINORS=10, MAX_CELLS=10)


def to_sympy(A: IntegerMatrix) -> Matrix:
    return Matrix(A.n_rows, A.n_cols, list(A.entries))


def random_matrix(
    rng: random.Random, max_rows: int = 5, max_cols: int = 5, bound: int = 4
) -> IntegerMatrix:
    n = rng.randint(1, max_rows)
    m = rng.randint(1, max_cols)
    rows = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]
    return IntegerMatrix.from_rows(rows, m)


def random_complex(
    rng: random.Random, max_vertices: int = 7, max_dim: int = 3
) -> SimplicialComplex:
    """A random pure complex: some d-subsets of a small vertex set"""
    n = rng.randint(3, max_vertices)
    d = rng.randint(1, min(max_dim, n - 1))
    pool: List[tuple] = list(combinations(range(1, n + 1), d + 1))
    facets = rng.sample(pool, rng.randint(1, min(len(pool), 12)))
    return build_complex(facets)
