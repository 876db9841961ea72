"""
Reduction modulo the emitted binomials, and the two checks built on it: the
randomized division-closure test and standard monomial counts.
"""

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError
from symtope.services.groebner.basis import Binomial, GroebnerBasis
from symtope.services.groebner.monomials import (
    Monomial,
    div,
    divides,
    mul,
    one,
    variable,
)

logger = structlog.get_logger(__name__)


def normal_form(m: Monomial, binomials: Sequence[Binomial]) -> Monomial:
    """
    Replace lead by trail while some lead divides m; the first divisible
    binomial wins.
    """
    current = m
    while True:
        for b in binomials:
            if divides(b.lead, current):
                current = mul(div(current, b.lead), b.trail)
                break
        else:
            return current


def is_standard(m: Monomial, binomials: Sequence[Binomial]) -> bool:
    return not any(divides(b.lead, m) for b in binomials)


@dataclass(frozen=True)
class TrialReport:
    trials: int
    failures: int
    seed: int
    counterexamples: Tuple[Tuple[Monomial, Monomial], ...] = field(
        default=(), repr=False
    )

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _random_member_pair(
    rng: random.Random, gb: GroebnerBasis, steps: int
) -> Tuple[Monomial, Monomial]:
    """Two monomials joined by a chain of binomial moves, so u - v lies in the ideal."""
    binomials = gb.binomials
    n = gb.n_vars
    u = one(n)
    for _ in range(rng.randint(1, 3)):
        b = rng.choice(binomials)
        u = mul(u, b.lead if rng.random() < 0.5 else b.trail)
    for _ in range(rng.randint(0, 2)):
        u = mul(u, variable(n, rng.randrange(n)))
    v = u
    for _ in range(steps):
        moves = [(b.lead, b.trail) for b in binomials if divides(b.lead, v)]
        moves += [(b.trail, b.lead) for b in binomials if divides(b.trail, v)]
        if not moves:
            break
        src, dst = rng.choice(moves)
        v = mul(div(v, src), dst)
    return u, v


def division_closure_trials(
    gb: GroebnerBasis,
    seed: int = 0,
    trials: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> TrialReport:
    """
    Random ideal members u - v must reduce to the same normal form when the
    emitted set is a Gröbner basis.
    """
    settings = resolve(settings)
    trials = trials if trials is not None else settings.GB_TRIALS
    rng = random.Random(seed)
    failures = 0
    examples: List[Tuple[Monomial, Monomial]] = []
    for _ in range(trials):
        u, v = _random_member_pair(rng, gb, rng.randint(1, 6))
        if normal_form(u, gb.binomials) != normal_form(v, gb.binomials):
            failures += 1
            if len(examples) < 10:
                examples.append((u, v))
    logger.info("division_closure_trials", trials=trials, failures=failures, seed=seed)
    return TrialReport(trials, failures, seed, tuple(examples))


def standard_monomial_counts(
    gb: GroebnerBasis, K: int, settings: Optional[Settings] = None
) -> List[int]:
    """
    Number of standard monomials of each degree 0..K, which equals the Hilbert
    function of the toric ring when the binomials form a Gröbner basis.
    """
    settings = resolve(settings)
    n = gb.n_vars
    # a lead can only start dividing once its largest variable is appended
    by_last: Dict[int, List[Monomial]] = defaultdict(list)
    for lead in gb.leads():
        by_last[max(i for i, e in enumerate(lead) if e)].append(lead)
    counts = [0] * (K + 1)
    exponents = [0] * n
    visited = 0

    def extend(start: int, deg: int) -> None:
        nonlocal visited
        counts[deg] += 1
        visited += 1
        if visited > settings.MAX_POINTS:
            raise GuardExceededError("max_points", visited, settings.MAX_POINTS)
        if deg == K:
            return
        for i in range(start, n):
            exponents[i] += 1
            current = tuple(exponents)
            if not any(divides(lead, current) for lead in by_last[i]):
                extend(i, deg + 1)
            exponents[i] -= 1

    extend(0, 0)
    logger.debug("standard_monomial_counts", K=K, counts=counts)
    return counts
