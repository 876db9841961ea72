"""
Variables and monomials of the toric ring of conv[A | -A].

There is one variable per lattice point of a saturated P: ``z`` for the origin
and x_{F+}, x_{F-} for every column F and its negative. Variables are numbered
z = 0, x_{F_l+} = 2l - 1, x_{F_l-} = 2l (columns 1-based), and monomials are
exponent tuples in that numbering.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

Monomial = Tuple[int, ...]

ORIGIN = "z"
PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class ToricVariable:
    kind: str
    column: int = 0

    @property
    def index(self) -> int:
        if self.kind == ORIGIN:
            return 0
        return 2 * self.column - 1 if self.kind == PLUS else 2 * self.column

    @property
    def name(self) -> str:
        return ORIGIN if self.kind == ORIGIN else f"x{self.kind}{self.column}"

    @property
    def sign(self) -> int:
        return {ORIGIN: 0, PLUS: 1, MINUS: -1}[self.kind]

    def bar(self) -> "ToricVariable":
        """x_{F+} ↔ x_{F-}; z is fixed."""
        if self.kind == ORIGIN:
            return self
        return ToricVariable(MINUS if self.kind == PLUS else PLUS, self.column)

    @classmethod
    def from_index(cls, index: int) -> "ToricVariable":
        if index == 0:
            return cls(ORIGIN)
        return cls(PLUS if index % 2 else MINUS, (index + 1) // 2)

    @classmethod
    def from_name(cls, name: str) -> "ToricVariable":
        if name == ORIGIN:
            return cls(ORIGIN)
        if len(name) < 3 or name[0] != "x" or name[1] not in (PLUS, MINUS):
            raise ValueError(f"not a toric variable name: {name!r}")
        return cls(name[1], int(name[2:]))


class DegRevLex:
    """
    Degree reverse lexicographic order on z ≺ x_{F1+} ≺ x_{F1-} ≺ ... .

    α ≺ β when deg α < deg β, or the degrees agree and α_l > β_l at the first
    index l where they differ.
    """

    def key(self, m: Monomial) -> Tuple:
        return (sum(m), tuple(-e for e in m))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


degrevlex = DegRevLex()


def one(n_vars: int) -> Monomial:
    return (0,) * n_vars


def variable(n_vars: int, index: int, power: int = 1) -> Monomial:
    out = [0] * n_vars
    out[index] = power
    return tuple(out)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def support(m: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def squarefree_part(m: Monomial) -> Monomial:
    return tuple(min(e, 1) for e in m)


def to_exponent_map(m: Monomial) -> Dict[str, int]:
    return {ToricVariable.from_index(i).name: e for i, e in enumerate(m) if e}


def from_exponent_map(exponents: Dict[str, int], n_vars: int) -> Monomial:
    out = [0] * n_vars
    for name, e in exponents.items():
        out[ToricVariable.from_name(name).index] += e
    return tuple(out)


def from_variables(indices: Iterable[int], n_vars: int) -> Monomial:
    out = [0] * n_vars
    for i in indices:
        out[i] += 1
    return tuple(out)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e:
            name = ToricVariable.from_index(i).name
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) or "1"
