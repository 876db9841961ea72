"""
Exact lattice point and sumset counts for conv[A | -A] when ker A has rank ≤ 1.

kP is the image of the ℓ1-ball of radius k under A. A lattice point x = A·z
has its preimages on a line z + R·a (a spanning ker A, possibly absent); the
preimages of the lattice split into torsion cosets c + Z^s. On each coset the
line is sampled on the grid c + Z^s + (1/N)·Z·a, fine enough to contain every
breakpoint of t ↦ ‖z + t·a‖₁, so a line meets the ball iff it has a grid point
inside, and those grid points form one run. Counting points minus adjacent
pairs inside the ball therefore counts lines, and both counts are separable
over coordinates.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, lcm, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import CorankError, check_guard
from symtope.services.linalg import integer_kernel_basis, torsion_vectors
from symtope.services.polytope import CSPolytope
from symtope.utils.common import common_denominator

logger = structlog.get_logger(__name__)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class FibreData:
    cosets: Tuple[Vector, ...]
    kernel: Optional[Tuple[int, ...]]

    @property
    def corank(self) -> int:
        return 0 if self.kernel is None else 1

    def grid(self, coset: Vector) -> int:
        """N with every breakpoint of the coset lines on the (1/N)·a grid."""
        if self.kernel is None:
            return 1
        return lcm(*(c.denominator * abs(a) for c, a in zip(coset, self.kernel) if a))


def _frac(x: Fraction) -> Fraction:
    return x - floor(x)


def fibre_data(polytope: CSPolytope, settings: Optional[Settings] = None) -> FibreData:
    settings = resolve(settings)
    A = polytope.A
    corank = A.n_cols - polytope.rank
    if corank > 1:
        raise CorankError(f"fibre counting needs corank ≤ 1, got {corank}")
    kernel = integer_kernel_basis(A, polytope.snf)
    torsion = torsion_vectors(A, polytope.snf)
    check_guard("max_points", prod(t.order for t in torsion), settings.MAX_POINTS)
    zero = tuple(Fraction(0) for _ in range(A.n_cols))
    cosets = []
    for multiples in product(*(range(t.order) for t in torsion)):
        c = zero
        for n, t in zip(multiples, torsion):
            c = tuple(x + n * y for x, y in zip(c, t.v))
        cosets.append(tuple(_frac(x) for x in c))
    return FibreData(tuple(cosets), kernel[0] if kernel else None)


def _offsets(x: Fraction, limit: int, scale: int) -> range:
    """Integers y with scale·|x + y| ≤ limit."""
    radius = Fraction(limit, scale)
    return range(ceil(-x - radius), floor(-x + radius) + 1)


def _scaled(x: Fraction, scale: int) -> int:
    value = x * scale
    if value.denominator != 1:
        raise ArithmeticError("scale does not clear the denominator")
    return int(value)


def ball_profile(phi: Sequence[Fraction], K: int) -> List[int]:
    """[#{y ∈ Z^s : ‖φ + y‖₁ ≤ k} for k = 0..K]."""
    scale = common_denominator(phi)
    limit = K * scale
    dist = [0] * (limit + 1)
    dist[0] = 1
    for x in phi:
        steps = Counter(_scaled(abs(x + y), scale) for y in _offsets(x, limit, scale))
        new = [0] * (limit + 1)
        for t, count in enumerate(dist):
            if not count:
                continue
            for p, mult in steps.items():
                if t + p <= limit:
                    new[t + p] += count * mult
        dist = new
    out, acc, idx = [], 0, 0
    for k in range(K + 1):
        while idx <= k * scale:
            acc += dist[idx]
            idx += 1
        out.append(acc)
    return out


def pair_profile(
    phi: Sequence[Fraction], shift: Sequence[Fraction], K: int
) -> List[int]:
    """[#{y : ‖φ + y‖₁ ≤ k and ‖φ + shift + y‖₁ ≤ k} for k = 0..K]."""
    scale = common_denominator(list(phi) + [x + h for x, h in zip(phi, shift)])
    limit = K * scale
    table: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for x, h in zip(phi, shift):
        steps: Counter = Counter()
        for y in _offsets(x, limit, scale):
            p = _scaled(abs(x + y), scale)
            q = _scaled(abs(x + h + y), scale)
            if q <= limit:
                steps[(p, q)] += 1
        new: Dict[Tuple[int, int], int] = defaultdict(int)
        for (P, Q), count in table.items():
            for (p, q), mult in steps.items():
                if P + p <= limit and Q + q <= limit:
                    new[(P + p, Q + q)] += count * mult
        table = new
    buckets = [0] * (K + 1)
    for (P, Q), count in table.items():
        buckets[-(-max(P, Q) // scale)] += count
    out, acc = [], 0
    for b in buckets:
        acc += b
        out.append(acc)
    return out


def _pieces(data: FibreData) -> Iterator[Tuple[Vector, Optional[Vector], int, int]]:
    """(φ, step, j, N) for every grid offset φ = c + (j/N)·a of every coset."""
    for c in data.cosets:
        n = data.grid(c)
        if data.kernel is None:
            yield c, None, 0, n
            continue
        step = tuple(Fraction(a, n) for a in data.kernel)
        for j in range(n):
            yield tuple(x + j * d for x, d in zip(c, step)), step, j, n


def ehrhart_counts(
    polytope: CSPolytope, K: int, settings: Optional[Settings] = None
) -> List[int]:
    """E(k) = |kP ∩ aff-lattice| for k = 0..K."""
    settings = resolve(settings)
    data = fibre_data(polytope, settings)
    pieces = list(_pieces(data))
    check_guard("max_points", len(pieces) * (K + 1) ** 2, settings.MAX_POINTS)
    totals = [0] * (K + 1)
    for phi, step, _, _ in pieces:
        points = ball_profile(phi, K)
        pairs = pair_profile(phi, step, K) if step is not None else [0] * (K + 1)
        for k in range(K + 1):
            totals[k] += points[k] - pairs[k]
    logger.debug(
        "ehrhart_counts",
        polytope=polytope.name,
        cosets=len(data.cosets),
        pieces=len(pieces),
    )
    return totals


def hilbert_counts(
    polytope: CSPolytope, K: int, settings: Optional[Settings] = None
) -> List[int]:
    """
    HF(k) = |k-fold sumset of P ∩ lattice| for k = 0..K, assuming the lattice
    points of P are the origin and ±columns (checked by the caller).
    """
    data = fibre_data(polytope, settings)
    s = polytope.n_columns
    zero = tuple(Fraction(0) for _ in range(s))
    points = ball_profile(zero, K)
    if data.kernel is None:
        return points
    pairs = pair_profile(zero, tuple(Fraction(a) for a in data.kernel), K)
    return [p - q for p, q in zip(points, pairs)]


def _ball_points(phi: Sequence[Fraction], k: int) -> Iterator[Vector]:
    """Points φ + y (y integral) with ‖φ + y‖₁ ≤ k."""
    s = len(phi)
    current: List[Fraction] = [Fraction(0)] * s

    def walk(i: int, budget: Fraction) -> Iterator[Vector]:
        if i == s:
            yield tuple(current)
            return
        x = phi[i]
        for y in range(ceil(-x - budget), floor(-x + budget) + 1):
            current[i] = x + y
            yield from walk(i + 1, budget - abs(x + y))

    yield from walk(0, Fraction(k))


def _norm(z: Sequence[Fraction]) -> Fraction:
    return sum(abs(x) for x in z)


def idp_witnesses(
    polytope: CSPolytope, k: int, cap: int, settings: Optional[Settings] = None
) -> Tuple[int, List[Tuple[int, ...]]]:
    """
    Lattice points of kP that are not sums of k lattice points of P, as
    (count, first ``cap`` points in ambient coordinates).
    """
    data = fibre_data(polytope, settings)
    A = polytope.A
    count = 0
    found: List[Tuple[int, ...]] = []
    for c_index, c in enumerate(data.cosets):
        n = data.grid(c)
        step = None
        if data.kernel is not None:
            step = tuple(Fraction(a, n) for a in data.kernel)
        for j in range(n):
            if c_index == 0 and j == 0:
                continue
            offset = tuple(x + j * d for x, d in zip(c, step)) if step else c
            for z in _ball_points(offset, k):
                if step is not None:
                    if _norm([x - d for x, d in zip(z, step)]) <= k:
                        continue
                    if c_index == 0 and _reaches_integer_point(z, step, j, n, k):
                        continue
                count += 1
                if len(found) < cap:
                    found.append(tuple(int(v) for v in A.apply(z)))
    logger.info("idp_witnesses", polytope=polytope.name, k=k, count=count)
    return count, found


def _reaches_integer_point(z: Vector, step: Vector, j: int, n: int, k: int) -> bool:
    point = z
    for _ in range(n - j):
        point = tuple(x + d for x, d in zip(point, step))
        if _norm(point) > k:
            return False
    return True
