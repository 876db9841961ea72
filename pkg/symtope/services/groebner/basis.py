"""
Saturation and the binomial Gröbner basis of the toric ideal of conv[A | -A].

Every minimal linear dependency a of the columns contributes binomials built
from the multiset M_a (column F_l with sign sign(a_l), repeated |a_l| times):

  1a/1b  |M_a| = 2k, k-subsets M with the min(a) restriction:
         ∏_{F∈M} x_F - ∏_{F∈M_a∖M} x_{F̄}
  2      |M_a| = 2k+1, (k+1)-subsets:  ∏_{F∈M} x_F - z·∏_{F∈M_a∖M} x_{F̄}
  3      |M_a| = 2k, (k+1)-subsets holding +F_min(a) at least twice:
         ∏_{F∈M} x_F - z²·∏_{F∈M_a∖M} x_{F̄}
  4      x_{F+}·x_{F-} - z² for every column.

Each binomial is oriented so that its lead is the larger monomial.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import IncompleteDependenciesError, check_guard
from symtope.services.groebner.monomials import (
    Monomial,
    degrevlex,
    format_monomial,
    is_squarefree,
    to_exponent_map,
)
from symtope.services.linalg import DependencySet, IntegerMatrix, minimal_dependencies
from symtope.services.polytope import (
    COHOMOLOGY,
    HOMOLOGY,
    MATRIX,
    iter_lattice_points,
    polytope_from_matrix,
)
from symtope.utils.common import sign_normalized

logger = structlog.get_logger(__name__)

TYPE_1A = "1a"
TYPE_1B = "1b"
TYPE_2 = "2"
TYPE_3 = "3"
TYPE_4 = "4"


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    trail: Monomial
    btype: str
    dependency: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    @property
    def degree(self) -> int:
        return sum(self.lead)

    @property
    def lead_squarefree(self) -> bool:
        return is_squarefree(self.lead)

    def to_dict(self) -> Dict:
        return {
            "type": self.btype,
            "lead": to_exponent_map(self.lead),
            "trail": to_exponent_map(self.trail),
        }

    def __str__(self) -> str:
        return f"{format_monomial(self.lead)} - {format_monomial(self.trail)}"


@dataclass(frozen=True)
class GroebnerBasis:
    binomials: Tuple[Binomial, ...]
    n_columns: int
    column_order: Tuple[int, ...]
    dependencies: DependencySet
    matrix: IntegerMatrix = field(compare=False, repr=False)

    @property
    def n_vars(self) -> int:
        return 2 * self.n_columns + 1

    @property
    def complete(self) -> bool:
        return self.dependencies.complete

    def __iter__(self) -> Iterator[Binomial]:
        return iter(self.binomials)

    def __len__(self) -> int:
        return len(self.binomials)

    def leads(self) -> List[Monomial]:
        return [b.lead for b in self.binomials]

    def of_type(self, btype: str) -> List[Binomial]:
        return [b for b in self.binomials if b.btype == btype]


def saturate(
    A: IntegerMatrix, kind: str = MATRIX, settings: Optional[Settings] = None
) -> IntegerMatrix:
    """
    Reduced columns of A followed by one representative of every further
    antipodal pair of nonzero lattice points of P. Boundary and coboundary
    matrices are saturated already and are only reduced.
    """
    polytope = polytope_from_matrix(A)
    if kind in (HOMOLOGY, COHOMOLOGY):
        return polytope.A
    known = {sign_normalized(col) for col in polytope.A.columns()}
    extra = set()
    for u in iter_lattice_points(polytope, 1, settings):
        if not any(u):
            continue
        point = sign_normalized(tuple(int(x) for x in polytope.lattice.from_coords(u)))
        if point not in known:
            extra.add(point)
    if not extra:
        return polytope.A
    logger.info("saturate", added=len(extra), columns=polytope.n_columns)
    return IntegerMatrix.from_columns(polytope.A.columns() + sorted(extra), A.n_rows)


def _multiplicities(bounds: Sequence[int], total: int) -> Iterator[Tuple[int, ...]]:
    """Vectors 0 ≤ m_l ≤ bounds_l with Σ m_l = total."""
    n = len(bounds)
    room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        room[i] = room[i + 1] + bounds[i]
    current = [0] * n

    def walk(i: int, left: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield tuple(current)
            return
        for m in range(max(0, left - room[i + 1]), min(bounds[i], left) + 1):
            current[i] = m
            yield from walk(i + 1, left - m)
        current[i] = 0

    if 0 <= total <= room[0]:
        yield from walk(0, total)


class GroebnerCalculator:
    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return resolve(self._settings)

    def groebner_basis(
        self,
        A: IntegerMatrix,
        permutation: Optional[Sequence[int]] = None,
        norm_bound: Optional[int] = None,
        allow_incomplete: bool = False,
        settings: Optional[Settings] = None,
    ) -> GroebnerBasis:
        """
        Gröbner basis of I_P for a saturated A under degrevlex with the column
        order of A, or of A's columns permuted by ``permutation`` (0-based,
        new column i is old column permutation[i]).
        """
        settings = settings or self.settings
        order = tuple(range(A.n_cols))
        if permutation is not None:
            if sorted(permutation) != list(order):
                raise ValueError(
                    f"not a permutation of the {A.n_cols} columns: {list(permutation)}"
                )
            order = tuple(permutation)
            A = A.select_columns(order)
        deps = minimal_dependencies(A, norm_bound, settings)
        if not deps.complete and not allow_incomplete:
            raise IncompleteDependenciesError(
                "minimal dependencies are only known inside a norm box",
                detail=f"norm_bound={deps.norm_bound}",
            )
        s = A.n_cols
        emitted: Dict[Tuple[Monomial, Monomial], Binomial] = {}

        def emit(
            first: Monomial,
            second: Monomial,
            btype: str,
            a: Optional[Tuple[int, ...]],
        ) -> None:
            lead, trail = first, second
            if not degrevlex.greater(first, second):
                lead, trail = second, first
            if (lead, trail) not in emitted:
                emitted[(lead, trail)] = Binomial(lead, trail, btype, a)
                check_guard("max_cells", len(emitted), settings.MAX_CELLS)

        for dep in deps.dependencies:
            for first, second, btype in self._dependency_binomials(dep.a):
                emit(first, second, btype, dep.a)
        for col in range(1, s + 1):
            lead = [0] * (2 * s + 1)
            lead[2 * col - 1] = lead[2 * col] = 1
            trail = [0] * (2 * s + 1)
            trail[0] = 2
            emit(tuple(lead), tuple(trail), TYPE_4, None)

        binomials = tuple(emitted.values())
        logger.info(
            "groebner_basis",
            columns=s,
            dependencies=len(deps.dependencies),
            binomials=len(binomials),
            complete=deps.complete,
        )
        return GroebnerBasis(binomials, s, order, deps, A)

    def _dependency_binomials(
        self, a: Tuple[int, ...]
    ) -> Iterator[Tuple[Monomial, Monomial, str]]:
        s = len(a)
        bounds = [abs(x) for x in a]
        size = sum(bounds)
        first = next(i for i, x in enumerate(a) if x)
        k = size // 2

        def monomials(m: Tuple[int, ...], z_power: int) -> Tuple[Monomial, Monomial]:
            left = [0] * (2 * s + 1)
            right = [0] * (2 * s + 1)
            right[0] = z_power
            for l, (x, ml) in enumerate(zip(a, m)):
                if not x:
                    continue
                plus, minus = 2 * l + 1, 2 * l + 2
                own, bar = (plus, minus) if x > 0 else (minus, plus)
                left[own] += ml
                right[bar] += abs(x) - ml
            return tuple(left), tuple(right)

        if size % 2:
            for m in _multiplicities(bounds, k + 1):
                yield (*monomials(m, 1), TYPE_2)
            return
        btype = TYPE_1A if a[first] > 0 else TYPE_1B
        for m in _multiplicities(bounds, k):
            if a[first] > 0 and m[first] > 0:
                continue
            if a[first] < 0 and m[first] == bounds[first]:
                continue
            yield (*monomials(m, 0), btype)
        if a[first] >= 2:
            for m in _multiplicities(bounds, k + 1):
                if m[first] >= 2:
                    yield (*monomials(m, 2), TYPE_3)


groebner_calculator = GroebnerCalculator()


def groebner_basis(
    A: IntegerMatrix,
    permutation: Optional[Sequence[int]] = None,
    norm_bound: Optional[int] = None,
    allow_incomplete: bool = False,
    settings: Optional[Settings] = None,
) -> GroebnerBasis:
    return groebner_calculator.groebner_basis(
        A, permutation, norm_bound, allow_incomplete, settings
    )


def evaluate(m: Monomial, A: IntegerMatrix) -> Tuple[Tuple[int, ...], int]:
    """Image of a monomial in the semigroup ring: (Σ lattice points, degree)."""
    point = [0] * A.n_rows
    for index, e in enumerate(m):
        if not e or index == 0:
            continue
        col = A.column((index - 1) // 2)
        sign = 1 if index % 2 else -1
        for i, x in enumerate(col):
            point[i] += sign * e * x
    return tuple(point), sum(m)


def is_toric_member(binomial: Binomial, A: IntegerMatrix) -> bool:
    return evaluate(binomial.lead, A) == evaluate(binomial.trail, A)
