"""
Spanning and IDP analysis.

A lattice polytope is IDP when every lattice point of kP is a sum of k lattice
points of P, which for these polytopes is the same as HF(k) = E(k) for all k.
The comparison is truncated at k_max = 2·dim P.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.services.invariants.counting import idp_witnesses
from symtope.services.invariants.ehrhart import (
    FIBRE,
    HStarVector,
    ehrhart_calculator,
    numerator_from_counts,
    trim_numerator,
)
from symtope.services.linalg import IntegerMatrix, smith_normal_form
from symtope.services.polytope import CSPolytope, iter_lattice_points

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SpanningReport:
    spanning: bool
    alpha_max: int

    @property
    def not_idp(self) -> bool:
        """Torsion in the cokernel rules IDP out."""
        return not self.spanning


@dataclass(frozen=True)
class IDPReport:
    hstar: HStarVector
    hilbert_numerator: Tuple[int, ...]
    idp_up_to: int
    ehrhart_counts: Tuple[int, ...]
    hilbert_counts: Tuple[int, ...]
    failing_k: Optional[int] = None
    witness_count: int = 0
    witnesses: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)

    @property
    def idp(self) -> bool:
        return self.failing_k is None


def spanning_report(A: IntegerMatrix) -> SpanningReport:
    alpha = smith_normal_form(A).max_divisor
    return SpanningReport(alpha == 1, alpha)


def _enumerated_witnesses(
    polytope: CSPolytope, k: int, cap: int, settings: Settings
) -> Tuple[int, List[Tuple[int, ...]]]:
    sums = ehrhart_calculator.sumsets(polytope, k, settings)[k]
    count = 0
    found: List[Tuple[int, ...]] = []
    for u in iter_lattice_points(polytope, k, settings):
        if u in sums:
            continue
        count += 1
        if len(found) < cap:
            found.append(tuple(int(x) for x in polytope.lattice.from_coords(u)))
    return count, found


def idp_report(
    polytope: CSPolytope,
    k_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> IDPReport:
    """
    h*, the Hilbert numerator, and the witnesses of the smallest dilate where
    the two counting functions differ (at most WITNESS_CAP points are kept).
    """
    settings = resolve(settings)
    d = polytope.rank
    K = k_max if k_max is not None else 2 * d
    hstar = ehrhart_calculator.ehrhart_hstar(polytope, settings)
    E = ehrhart_calculator.ehrhart_function(polytope, K, settings)
    HF = ehrhart_calculator.hilbert_function(polytope, K, settings)
    if any(h > e for h, e in zip(HF, E)):
        raise ArithmeticError("Hilbert function exceeds the Ehrhart function")
    numerator = trim_numerator(numerator_from_counts(HF, d))
    failing = next((k for k in range(K + 1) if HF[k] < E[k]), None)
    report = IDPReport(hstar, numerator, K, tuple(E), tuple(HF))
    if failing is None:
        logger.info("idp_report", polytope=polytope.name, idp=True, k_max=K)
        return report

    cap = settings.WITNESS_CAP
    generators = E[1] == 2 * polytope.n_columns + 1
    if ehrhart_calculator.route(polytope) == FIBRE and generators:
        count, points = idp_witnesses(polytope, failing, cap, settings)
    else:
        count, points = _enumerated_witnesses(polytope, failing, cap, settings)
    gap = E[failing] - HF[failing]
    if count != gap:
        raise ArithmeticError(f"witness count {count} disagrees with E - HF = {gap}")
    logger.info(
        "idp_report",
        polytope=polytope.name,
        idp=False,
        failing_k=failing,
        witnesses=count,
    )
    return IDPReport(
        hstar, numerator, K, tuple(E), tuple(HF), failing, count, tuple(points)
    )
