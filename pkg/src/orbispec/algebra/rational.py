"""Exact rationals and their classes modulo one."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Read an integer, a ``Fraction`` or a ``"p/q"`` string exactly."""
    if isinstance(value, float):
        raise TypeError("as_rational: floats are not exact, use 'p/q'")

    return Fraction(value)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class CyclicRational:
    """An element of ℚ/ℤ, stored by its representative in [0, 1)."""

    representative: Fraction

    def __post_init__(self) -> None:
        value = Fraction(self.representative)
        object.__setattr__(self, "representative", value - math.floor(value))

    def __add__(self, other: "CyclicRational") -> "CyclicRational":
        return CyclicRational(self.representative + other.representative)

    def __neg__(self) -> "CyclicRational":
        return CyclicRational(-self.representative)

    def __sub__(self, other: "CyclicRational") -> "CyclicRational":
        return self + (-other)

    def scale(self, factor: int) -> "CyclicRational":
        return CyclicRational(self.representative * factor)

    def __str__(self) -> str:
        return format_rational(self.representative)


def rational_split(value: RationalLike) -> Tuple[CyclicRational, int]:
    """Split ``r`` into its class ``{r}`` in ℚ/ℤ and ``[r] = floor(r)``."""
    value = as_rational(value)
    whole = math.floor(value)

    return CyclicRational(value - whole), whole
