"""
Facets of homology polytopes as labelings of the facets of the complex, and
the corank-one facet counting formula.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import structlog

from symtope.core.errors import NotPrimitiveError
from symtope.services.complexes import SimplicialComplex, boundary_map, build_complex
from symtope.services.linalg import integer_rank
from symtope.services.polytope.hull import Facet
from symtope.services.polytope.polytope import CSPolytope

logger = structlog.get_logger(__name__)

FULL = "full"
ZERO = "zero"
FRACTIONAL = "fractional"


@dataclass(frozen=True)
class FacetLabeling:
    ell: Tuple[Fraction, ...]
    normal: Tuple[Fraction, ...]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.ell) if abs(x) == 1)

    @property
    def max_label(self) -> Fraction:
        return max(abs(x) for x in self.ell)


def facet_labeling(polytope: CSPolytope, facet: Facet) -> FacetLabeling:
    """ℓ_j = w·F_j for every source column F_j (the facets of Δ for P_Δ)."""
    ell = []
    for j in polytope.column_map:
        if j == 0:
            ell.append(Fraction(0))
            continue
        u = polytope.signed_coords(j)
        ell.append(sum(c * x for c, x in zip(facet.coords, u)))
    return FacetLabeling(tuple(ell), facet.normal)


def support_complex(
    complex_: SimplicialComplex, labeling: FacetLabeling
) -> Optional[SimplicialComplex]:
    """Γ_ℓ = ⟨σ_i : |ℓ_i| = 1⟩."""
    top = complex_.top_facets
    if not labeling.support:
        return None
    return build_complex([top[i] for i in labeling.support])


def verify_spanning_forest(
    complex_: SimplicialComplex, labeling: FacetLabeling
) -> bool:
    """
    True when the support of the labeling carries a spanning forest: the
    boundary columns of the support facets reach the full rank of ∂_d.
    """
    d = complex_.dim
    boundary = boundary_map(complex_, d)
    full_rank = integer_rank(boundary.rows())
    support = labeling.support
    if not support:
        return full_rank == 0
    restricted = boundary.select_columns(support)
    return integer_rank(restricted.rows()) == full_rank


def classify_facet(labeling: FacetLabeling) -> Tuple[str, Optional[int]]:
    """
    Corank-one facet case: every label ±1, a single zero label, or a single
    fractional label; returns the case and the index of the exceptional label.
    """
    off = [i for i, x in enumerate(labeling.ell) if abs(x) != 1]
    if not off:
        return FULL, None
    if len(off) > 1:
        raise ValueError("more than one label off ±1; the kernel is not corank one")
    k = off[0]
    return (ZERO if labeling.ell[k] == 0 else FRACTIONAL), k


def equal_weight_partition_count(multiset: Iterable[int]) -> int:
    """
    Sign assignments b ∈ {±1}^|S| with Σ b_i s_i = 0, elements distinguished
    by position.
    """
    sums = Counter({0: 1})
    for s in multiset:
        step: Counter = Counter()
        for total, count in sums.items():
            step[total + s] += count
            step[total - s] += count
        sums = step
    return sums[0]


def facet_count_corank1(a: Sequence[int]) -> int:
    """
    Facet count of conv[A | -A] when ker A is spanned by the primitive vector a:
    part(S) + Σ_k part(S∖a_k) + Σ_k Σ_{i=1}^{|a_k|-1} part(S∖a_k ∪ {i}),
    the sums running over the nonzero a_k.
    """
    g = 0
    for x in a:
        g = gcd(g, x)
    if g != 1:
        raise NotPrimitiveError(f"kernel vector {tuple(a)} is not primitive")
    S = [abs(x) for x in a]
    total = equal_weight_partition_count(S)
    for k, ak in enumerate(S):
        if ak == 0:
            continue
        rest = S[:k] + S[k + 1 :]
        total += equal_weight_partition_count(rest)
        for i in range(1, ak):
            total += equal_weight_partition_count(rest + [i])
    logger.debug("facet_count_corank1", a=list(a), facets=total)
    return total


def facet_count_closed_orientable(s: int) -> int:
    """C(2m, m) for s = 2m and (2m+1)·C(2m, m) for s = 2m+1."""
    m = s // 2
    return comb(2 * m, m) if s % 2 == 0 else (2 * m + 1) * comb(2 * m, m)


def labelings(polytope: CSPolytope, facets: List[Facet]) -> List[FacetLabeling]:
    return [facet_labeling(polytope, f) for f in facets]
