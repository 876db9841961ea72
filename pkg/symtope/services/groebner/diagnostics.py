"""
Squarefreeness of the emitted leads and the corank-one obstruction to regular
unimodular triangulations.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import structlog

from symtope.core.config import Settings
from symtope.core.errors import CorankError
from symtope.services.groebner.basis import TYPE_3, GroebnerBasis, groebner_basis
from symtope.services.groebner.monomials import (
    Monomial,
    degrevlex,
    divides,
    is_squarefree,
)
from symtope.services.linalg import (
    IntegerMatrix,
    integer_kernel_basis,
    smith_normal_form,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class GBDiagnostics:
    squarefree_leads: bool
    nonsquarefree_types: Tuple[str, ...]
    unit_dependencies: bool
    type_counts: Dict[str, int] = field(default_factory=dict)


def gb_diagnostics(gb: GroebnerBasis) -> GBDiagnostics:
    """
    Report which binomial types carry non-squarefree leads. With only
    {-1,0,1} dependencies the leads must all be squarefree.
    """
    bad = sorted({b.btype for b in gb if not b.lead_squarefree})
    unit = all(d.is_unit() for d in gb.dependencies.dependencies)
    counts = dict(sorted(Counter(b.btype for b in gb).items()))
    if unit and (bad or counts.get(TYPE_3)):
        raise ArithmeticError(
            f"unit dependencies produced non-squarefree leads of types {bad}"
        )
    logger.info(
        "gb_diagnostics", squarefree=not bad, nonsquarefree_types=bad, types=counts
    )
    return GBDiagnostics(not bad, tuple(bad), unit, counts)


def _corank_one_kernel(A: IntegerMatrix) -> Tuple[int, ...]:
    kernel = integer_kernel_basis(A, smith_normal_form(A))
    if len(kernel) != 1:
        raise CorankError(f"expected a one-dimensional kernel, got rank {len(kernel)}")
    return kernel[0]


def rut_obstruction(A: IntegerMatrix) -> bool:
    """
    True when the unique (up to sign) minimal dependency of a saturated
    corank-one matrix has even coefficient sum and an entry above 1 in
    absolute value; P_A then has no regular unimodular triangulation.
    """
    a = [abs(x) for x in _corank_one_kernel(A)]
    blocked = sum(a) % 2 == 0 and max(a) > 1
    logger.info("rut_obstruction", dependency=a, obstructed=blocked)
    return blocked


@dataclass(frozen=True)
class DichotomyBranch:
    """One orientation choice; ``forced`` must then be a Gröbner basis element."""

    choice: str
    forced_lead: Monomial
    forced_trail: Monomial
    escapes: Tuple[Monomial, ...]

    @property
    def forced_squarefree(self) -> bool:
        return is_squarefree(self.forced_lead)

    @property
    def holds(self) -> bool:
        return not self.forced_squarefree and not self.escapes


@dataclass(frozen=True)
class DichotomyReport:
    applicable: bool
    dependency: Tuple[int, ...]
    flipped_columns: Tuple[int, ...] = ()
    pivot: Optional[int] = None
    critical: Optional[Tuple[Monomial, Monomial]] = None
    degrevlex_lead: Optional[Monomial] = None
    branches: Tuple[DichotomyBranch, ...] = field(default=(), repr=False)

    @property
    def holds(self) -> bool:
        return self.applicable and all(b.holds for b in self.branches)


def _plus(column: int) -> int:
    return 2 * column + 1


def _minus(column: int) -> int:
    return 2 * column + 2


def _vector(n: int, entries: Dict[int, int]) -> Monomial:
    out = [0] * n
    for i, e in entries.items():
        out[i] += e
    return tuple(out)


def initial_ideal_dichotomy(
    A: IntegerMatrix, settings: Optional[Settings] = None
) -> DichotomyReport:
    """
    Walk both orientations of the critical binomial x²_{Fj+}·m1 - z²·m2 and of
    the degree-k binomial x_{Fj+}·m1 - x_{Fj-}·m2 it hinges on, checking in
    each branch that a non-squarefree generator is forced: no squarefree
    monomial of the emitted binomials other than z² can divide its lead.
    """
    raw = _corank_one_kernel(A)
    flipped = tuple(i for i, x in enumerate(raw) if x < 0)
    a = tuple(abs(x) for x in raw)
    if sum(a) % 2 or max(a) < 2:
        return DichotomyReport(False, a, flipped)

    columns = [
        tuple(-x for x in col) if i in flipped else col
        for i, col in enumerate(A.columns())
    ]
    A_pos = IntegerMatrix.from_columns(columns, A.n_rows)
    s = len(a)
    n = 2 * s + 1
    k = sum(a) // 2
    j = next(i for i, x in enumerate(a) if x >= 2)
    taken = [0] * s
    taken[j] = 2
    left = k - 1
    for l in range(s):
        extra = min(a[l] - taken[l], left)
        taken[l] += extra
        left -= extra
    m1_entries = {_plus(l): taken[l] - (2 if l == j else 0) for l in range(s)}
    m2_entries = {_minus(l): a[l] - taken[l] for l in range(s)}
    m1 = _vector(n, m1_entries)
    m2 = _vector(n, m2_entries)

    def with_(base: Monomial, extra: Dict[int, int]) -> Monomial:
        return tuple(x + y for x, y in zip(base, _vector(n, extra)))

    x2_m1 = with_(m1, {_plus(j): 2})
    z2_m2 = with_(m2, {0: 2})
    x_m1 = with_(m1, {_plus(j): 1})
    x_m2 = with_(m2, {_minus(j): 1})
    x2_m2 = with_(m2, {_minus(j): 2})
    z2_m1 = with_(m1, {0: 2})

    gb = groebner_basis(A_pos, settings=settings)
    z2 = _vector(n, {0: 2})
    J = {m for b in gb for m in (b.lead, b.trail) if m != z2 and is_squarefree(m)}

    def escapes(lead: Monomial, not_leading: List[Monomial]) -> Tuple[Monomial, ...]:
        return tuple(sorted(m for m in J if divides(m, lead) and m not in not_leading))

    branches = (
        DichotomyBranch("critical lead z2*m2", z2_m2, x2_m1, escapes(z2_m2, [])),
        DichotomyBranch(
            "critical lead x2*m1, degree-k lead x-*m2",
            x2_m1,
            z2_m2,
            escapes(x2_m1, [x_m1]),
        ),
        DichotomyBranch(
            "critical lead x2*m1, degree-k lead x+*m1, flipped lead z2*m1",
            z2_m1,
            x2_m2,
            escapes(z2_m1, []),
        ),
        DichotomyBranch(
            "critical lead x2*m1, degree-k lead x+*m1, flipped lead x2*m2",
            x2_m2,
            z2_m1,
            escapes(x2_m2, [x_m2]),
        ),
    )
    leading = x2_m1 if degrevlex.greater(x2_m1, z2_m2) else z2_m2
    report = DichotomyReport(True, a, flipped, j, (x2_m1, z2_m2), leading, branches)
    logger.info("initial_ideal_dichotomy", pivot=j, k=k, holds=report.holds)
    return report
