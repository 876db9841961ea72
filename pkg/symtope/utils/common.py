# Common helpers for exact rational bookkeeping
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """Serialize an exact rational as "p/q" ("p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values: Iterable[Rational]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def primitive(values: Sequence[Rational]) -> Tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = common_denominator(values)
    ints = [int(Fraction(v) * den) for v in values]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalized(values: Sequence[int]) -> Tuple[int, ...]:
    """Flip the vector so that its first nonzero entry is positive."""
    for x in values:
        if x:
            return tuple(values) if x > 0 else tuple(-v for v in values)
    return tuple(values)
