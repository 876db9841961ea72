"""
Ehrhart h*-vectors and toric Hilbert numerators.

Two routes share one interface: fibre counting (corank ≤ 1, any dimension the
dynamic programme fits) and direct enumeration against the hull (lattice
points of kP, k-fold sumsets of P ∩ lattice).
"""

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Set, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import check_guard
from symtope.services.invariants.counting import ehrhart_counts, hilbert_counts
from symtope.services.polytope import CSPolytope, iter_lattice_points, lattice_points

logger = structlog.get_logger(__name__)

FIBRE = "fibre"
ENUMERATION = "enumeration"


@dataclass(frozen=True)
class HStarVector:
    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        nonzero = [i for i, c in enumerate(self.coefficients) if c]
        return nonzero[-1] if nonzero else 0

    @property
    def normalized_volume(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def gamma(self) -> Optional[Tuple[int, ...]]:
        """γ with h(t) = Σ γ_i t^i (1+t)^(n-2i), defined for palindromic h."""
        if not self.is_palindromic():
            return None
        n = len(self.coefficients) - 1
        rest = list(self.coefficients)
        gamma = []
        for i in range(n // 2 + 1):
            g = rest[i]
            gamma.append(g)
            for j in range(n - 2 * i + 1):
                rest[i + j] -= g * comb(n - 2 * i, j)
        if any(rest):
            raise ArithmeticError("γ-expansion left a remainder")
        return tuple(gamma)


def numerator_from_counts(counts: Sequence[int], d: int) -> Tuple[int, ...]:
    """h_i = Σ_{j ≤ i} (-1)^(i-j) C(d+1, i-j) f(j) for i < len(counts)."""
    out = []
    for i in range(len(counts)):
        out.append(
            sum(
                (-1) ** (i - j) * comb(d + 1, i - j) * counts[j]
                for j in range(max(0, i - d - 1), i + 1)
            )
        )
    return tuple(out)


def counts_from_hstar(hstar: Sequence[int], d: int, K: int) -> List[int]:
    """E(k) = Σ_i h*_i C(k - i + d, d)."""
    return [
        sum(h * comb(k - i + d, d) for i, h in enumerate(hstar) if k >= i)
        for k in range(K + 1)
    ]


def trim_numerator(values: Sequence[int]) -> Tuple[int, ...]:
    values = list(values)
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values)


class EhrhartCalculator:
    """
    Computes E(k) and HF(k) and turns them into numerators.

    The fibre route applies whenever ker A has rank ≤ 1; the Hilbert part of
    it also needs P ∩ lattice = {0, ±columns}, which is read off E(1).
    """

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return resolve(self._settings)

    def route(self, polytope: CSPolytope) -> str:
        return FIBRE if polytope.n_columns - polytope.rank <= 1 else ENUMERATION

    def ehrhart_function(
        self, polytope: CSPolytope, K: int, settings: Optional[Settings] = None
    ) -> List[int]:
        settings = settings or self.settings
        d = polytope.rank
        if self.route(polytope) == FIBRE:
            return ehrhart_counts(polytope, K, settings)
        direct = [lattice_points(polytope, k, settings) for k in range(min(K, d) + 1)]
        if K <= d:
            return direct
        hstar = numerator_from_counts(direct, d)
        return counts_from_hstar(hstar, d, K)

    def ehrhart_hstar(
        self, polytope: CSPolytope, settings: Optional[Settings] = None
    ) -> HStarVector:
        d = polytope.rank
        counts = self.ehrhart_function(polytope, d, settings)
        hstar = numerator_from_counts(counts, d)
        if any(h < 0 for h in hstar):
            raise ArithmeticError(f"negative h* coefficient in {hstar}")
        logger.info(
            "ehrhart_hstar",
            polytope=polytope.name,
            route=self.route(polytope),
            hstar=list(hstar),
        )
        return HStarVector(hstar)

    def hilbert_function(
        self, polytope: CSPolytope, K: int, settings: Optional[Settings] = None
    ) -> List[int]:
        settings = settings or self.settings
        fibre = self.route(polytope) == FIBRE
        if fibre and self._points_are_generators(polytope, settings):
            return hilbert_counts(polytope, K, settings)
        return [len(layer) for layer in self.sumsets(polytope, K, settings)]

    def _points_are_generators(self, polytope: CSPolytope, settings: Settings) -> bool:
        points = self.ehrhart_function(polytope, 1, settings)[1]
        return points == 2 * polytope.n_columns + 1

    def sumsets(
        self, polytope: CSPolytope, K: int, settings: Optional[Settings] = None
    ) -> List[Set[Tuple[int, ...]]]:
        """k-fold sums of P ∩ lattice in lattice coordinates, k = 0..K."""
        settings = settings or self.settings
        base = list(iter_lattice_points(polytope, 1, settings))
        zero = tuple(0 for _ in range(polytope.rank))
        layers = [{zero}]
        for k in range(1, K + 1):
            prev = layers[-1]
            layer = {tuple(a + b for a, b in zip(p, q)) for p in prev for q in base}
            check_guard("max_points", len(layer), settings.MAX_POINTS)
            layers.append(layer)
        return layers

    def hilbert_numerator(
        self,
        polytope: CSPolytope,
        k_max: Optional[int] = None,
        settings: Optional[Settings] = None,
    ) -> Tuple[int, ...]:
        d = polytope.rank
        K = k_max if k_max is not None else 2 * d
        counts = self.hilbert_function(polytope, K, settings)
        numerator = trim_numerator(numerator_from_counts(counts, d))
        logger.info(
            "hilbert_numerator",
            polytope=polytope.name,
            k_max=K,
            numerator=list(numerator),
        )
        return numerator


ehrhart_calculator = EhrhartCalculator()


def ehrhart_hstar(
    polytope: CSPolytope, settings: Optional[Settings] = None
) -> HStarVector:
    return ehrhart_calculator.ehrhart_hstar(polytope, settings)


def hilbert_numerator(
    polytope: CSPolytope,
    k_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Tuple[int, ...]:
    return ehrhart_calculator.hilbert_numerator(polytope, k_max, settings)
