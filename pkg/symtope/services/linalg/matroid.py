"""
Column matroid of an integer matrix: circuits, bases and minimal linear
dependencies.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Dict, List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError, check_guard
from symtope.services.linalg.elimination import (
    column_rank,
    integer_rank,
    invert_rational,
    primitive_nullspace,
)
from symtope.services.linalg.matrix import IntegerMatrix
from symtope.services.linalg.smith import integer_kernel_basis, smith_normal_form
from symtope.services.linalg.unimodular import is_totally_unimodular
from symtope.utils.common import primitive, sign_normalized

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Circuit:
    columns: Tuple[int, ...]
    vector: Tuple[int, ...]


@dataclass(frozen=True)
class MinimalDependency:
    """Kernel vector a together with its signed multiset M_a."""

    a: Tuple[int, ...]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.a) if x)

    @property
    def size(self) -> int:
        return sum(abs(x) for x in self.a)

    @property
    def min_index(self) -> int:
        return self.support[0]

    def multiset(self) -> List[Tuple[int, int]]:
        """Signed column symbols (sign, column), column ℓ repeated |a_ℓ| times."""
        return [
            (1 if x > 0 else -1, i) for i, x in enumerate(self.a) for _ in range(abs(x))
        ]

    def is_unit(self) -> bool:
        return all(x in (-1, 0, 1) for x in self.a)


@dataclass(frozen=True)
class DependencySet:
    dependencies: Tuple[MinimalDependency, ...]
    complete: bool
    norm_bound: Optional[int] = None


def matroid_circuits(
    A: IntegerMatrix, settings: Optional[Settings] = None
) -> List[Circuit]:
    """
    All circuits of the column matroid with their primitive kernel vectors.

    With kernel rank c, the circuits are exactly the supports of kernel vectors
    vanishing on c - 1 coordinates whose restricted kernel is one-dimensional,
    so (c - 1)-subsets of coordinates are enumerated instead of column subsets.
    """
    settings = resolve(settings)
    s = A.n_cols
    check_guard("max_circuit_columns", s, settings.MAX_CIRCUIT_COLUMNS)
    kernel = integer_kernel_basis(A)
    c = len(kernel)
    if c == 0:
        return []
    check_guard("max_points", comb(s, c - 1), settings.MAX_POINTS)
    # kernel vectors are K·λ with K the s×c basis matrix
    K = [[kernel[j][i] for j in range(c)] for i in range(s)]
    found: Dict[Tuple[int, ...], Circuit] = {}
    for zeros in combinations(range(s), c - 1):
        restricted = [K[i] for i in zeros]
        if c > 1 and integer_rank(restricted) != c - 1:
            continue
        null = primitive_nullspace(restricted, c) if restricted else [(1,)]
        if len(null) != 1:
            continue
        lam = null[0]
        combo = [sum(K[i][j] * lam[j] for j in range(c)) for i in range(s)]
        vec = sign_normalized(primitive(combo))
        cols = tuple(i for i, x in enumerate(vec) if x)
        if cols not in found:
            found[cols] = Circuit(cols, vec)
    circuits = sorted(found.values(), key=lambda ct: (len(ct.columns), ct.columns))
    logger.debug("circuits", columns=s, corank=c, count=len(circuits))
    return circuits


def matroid_bases(
    A: IntegerMatrix, settings: Optional[Settings] = None
) -> List[Tuple[int, ...]]:
    """All column bases (maximal independent column sets)."""
    settings = resolve(settings)
    columns = A.columns()
    r = column_rank(columns)
    check_guard("max_bases", comb(A.n_cols, r), settings.MAX_BASES)
    return [
        cols
        for cols in combinations(range(A.n_cols), r)
        if column_rank([columns[j] for j in cols]) == r
    ]


def minimal_dependencies(
    A: IntegerMatrix,
    norm_bound: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> DependencySet:
    """
    Minimal linear dependencies of the columns of A.

    A kernel vector a is minimal when its signed multiset M_a is inclusion-minimal:
    no other nonzero kernel vector a' has a'_i = 0 or sign(a'_i) = sign(a_i) with
    |a'_i| ≤ |a_i| everywhere. Corank ≤ 1 is exact (±a for the
    primitive generator). For a totally unimodular matrix the minimal
    dependencies are the signed circuits, which is exact as well. Otherwise the
    kernel is searched inside the box |a_ℓ| ≤ norm_bound and the result is
    flagged incomplete.
    """
    settings = resolve(settings)
    snf = smith_normal_form(A)
    kernel = integer_kernel_basis(A, snf)
    c = len(kernel)
    if c == 0:
        return DependencySet((), True)
    if c == 1:
        a = sign_normalized(kernel[0])
        neg = tuple(-x for x in a)
        return DependencySet((MinimalDependency(a), MinimalDependency(neg)), True)
    if _unimodular(A, settings):
        deps = []
        for circuit in matroid_circuits(A, settings):
            deps.append(MinimalDependency(circuit.vector))
            deps.append(MinimalDependency(tuple(-x for x in circuit.vector)))
        deps.sort(key=lambda d: (d.size, [-x for x in d.a]))
        logger.info("minimal_dependencies_circuits", corank=c, count=len(deps))
        return DependencySet(tuple(deps), True)

    bound = norm_bound or settings.DEFAULT_NORM_BOUND
    s = A.n_cols
    check_guard("max_points", (2 * bound + 1) ** c, settings.MAX_POINTS)
    K = [[kernel[j][i] for j in range(c)] for i in range(s)]
    pivots = _independent_coordinates(K, c)
    K_inv = invert_rational([K[i] for i in pivots])
    # kernel vector with prescribed pivot coordinates t: K·K_J⁻¹·t
    lift = [
        [sum(Fraction(K[i][k]) * K_inv[k][j] for k in range(c)) for j in range(c)]
        for i in range(s)
    ]
    candidates = []
    for t in product(range(-bound, bound + 1), repeat=c):
        if not any(t):
            continue
        vec = [sum(row[j] * t[j] for j in range(c)) for row in lift]
        if all(v.denominator == 1 and abs(v) <= bound for v in vec):
            candidates.append(tuple(int(v) for v in vec))

    def dominated(a, b):
        return b != a and all(
            y == 0 or (x * y > 0 and abs(y) <= abs(x)) for x, y in zip(a, b)
        )

    minimal = [a for a in candidates if not any(dominated(a, b) for b in candidates)]
    minimal.sort(key=lambda a: (sum(abs(x) for x in a), [-x for x in a]))
    logger.info(
        "minimal_dependencies_bounded", corank=c, bound=bound, count=len(minimal)
    )
    return DependencySet(tuple(MinimalDependency(a) for a in minimal), False, bound)


def _unimodular(A: IntegerMatrix, settings: Settings) -> bool:
    try:
        return is_totally_unimodular(A, settings).unimodular
    except GuardExceededError:
        return False


def _independent_coordinates(K: List[List[int]], c: int) -> List[int]:
    chosen: List[int] = []
    for i, row in enumerate(K):
        if integer_rank([K[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == c:
                break
    return chosen
