"""Reflexivity of the pure subcomplexes obtained by deleting top-dimensional facets."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError, check_guard
from symtope.services.complexes import SimplicialComplex, subcomplex
from symtope.services.invariants.reflexivity import reflexivity_calculator
from symtope.services.polytope import homology_polytope

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SweepEntry:
    deleted: Tuple[int, ...]
    reflexive: Optional[bool]
    route: Optional[str] = None
    skipped: Optional[str] = None


def _sweep_entry(
    complex_: SimplicialComplex, deleted: Tuple[int, ...], settings: Settings
) -> SweepEntry:
    kept = [i for i in range(len(complex_.top_facets)) if i not in deleted]
    sub = subcomplex(complex_, kept)
    try:
        verdict = reflexivity_calculator.is_reflexive(
            homology_polytope(sub), settings=settings
        )
    except GuardExceededError as exc:
        return SweepEntry(deleted, None, skipped=exc.guard)
    return SweepEntry(deleted, verdict.reflexive, verdict.route)


def sweep_subcomplexes(
    complex_: SimplicialComplex,
    max_deleted: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> List[SweepEntry]:
    """
    One entry per set of deleted facets (indices into the top facets), up to
    ``max_deleted`` at a time; at least one facet always survives. Entries
    whose polytope is over a hull guard are reported as skipped.

    Entries are independent, so up to ``THREADS`` of them run at once; the
    order of the result does not depend on it.
    """
    settings = resolve(settings)
    s = len(complex_.top_facets)
    limit = s - 1 if max_deleted is None else min(max_deleted, s - 1)
    total = sum(comb(s, k) for k in range(limit + 1))
    check_guard("max_bases", total, settings.MAX_BASES)
    deletions = [d for k in range(limit + 1) for d in combinations(range(s), k)]

    def run(deleted: Tuple[int, ...]) -> SweepEntry:
        return _sweep_entry(complex_, deleted, settings)

    if settings.THREADS == 1:
        entries = [run(d) for d in deletions]
    else:
        with ThreadPoolExecutor(max_workers=settings.THREADS) as pool:
            entries = list(pool.map(run, deletions))
    logger.info(
        "sweep_subcomplexes",
        complex=complex_.name,
        threads=settings.THREADS,
        entries=len(entries),
        reflexive=sum(1 for e in entries if e.reflexive),
        skipped=sum(1 for e in entries if e.skipped),
    )
    return entries
