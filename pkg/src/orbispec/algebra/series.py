"""Truncated power series 1 + a₁T + … + a_N T^N over a group ring ℤ[A]."""

import re
from typing import Callable, List, Optional, Sequence, Tuple

from orbispec import error, logger
from orbispec.algebra.ring import (
    GradingGroup,
    GroupRingElement,
    parse_element,
    serialize_element,
)

log = logger.get_logger(__name__)


class TruncatedSeries:
    """A series with constant term the unit, known modulo T^(N+1)."""

    __slots__ = ("_group", "_order", "_coefficients")

    def __init__(
        self,
        group: GradingGroup,
        order: int,
        coefficients: Sequence[GroupRingElement] = (),
    ) -> None:
        if order < 0:
            raise error.SeriesError(f"truncation order {order} is negative")

        unit = GroupRingElement.one(group)
        padded: List[GroupRingElement] = list(coefficients[: order + 1])

        for coefficient in padded:
            if coefficient.group != group:
                raise error.SignatureError(
                    f"coefficient in {coefficient.group}, series in {group}"
                )

        if not padded:
            padded = [unit]

        if padded[0] != unit:
            raise error.SeriesError(
                f"constant term is {padded[0]}, expected the unit"
            )

        padded.extend(
            GroupRingElement.zero(group) for _ in range(order + 1 - len(padded))
        )

        self._group = group
        self._order = order
        self._coefficients = tuple(padded)

    @classmethod
    def one(cls, group: GradingGroup, order: int) -> "TruncatedSeries":
        return cls(group, order)

    @property
    def group(self) -> GradingGroup:
        return self._group

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> Tuple[GroupRingElement, ...]:
        return self._coefficients

    def __getitem__(self, degree: int) -> GroupRingElement:
        if degree < 0 or degree > self._order:
            raise IndexError(
                f"degree {degree} outside 0..{self._order} of the series"
            )

        return self._coefficients[degree]

    def _check(self, other: "TruncatedSeries") -> None:
        if self._group != other._group:
            raise error.SignatureError(
                f"cannot combine series over {self._group} and {other._group}"
            )

        if self._order != other._order:
            raise error.SeriesError(
                f"cannot combine series of order {self._order} and "
                f"{other._order}"
            )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        self._check(other)
        zero = GroupRingElement.zero(self._group)
        result = []

        for n in range(self._order + 1):
            total = zero
            for i in range(n + 1):
                left, right = self._coefficients[i], other._coefficients[n - i]
                if left and right:
                    total = total + left * right
            result.append(total)

        return TruncatedSeries(self._group, self._order, result)

    def inverse(self) -> "TruncatedSeries":
        """The multiplicative inverse, b₀ = 1, b_n = −Σ aᵢ b_{n−i}."""
        zero = GroupRingElement.zero(self._group)
        result = [GroupRingElement.one(self._group)]

        for n in range(1, self._order + 1):
            total = zero
            for i in range(1, n + 1):
                left, right = self._coefficients[i], result[n - i]
                if left and right:
                    total = total + left * right
            result.append(-total)

        return TruncatedSeries(self._group, self._order, result)

    def substitute(
        self, factor: int, order: Optional[int] = None
    ) -> "TruncatedSeries":
        """Replace T by T^factor, truncating at ``order``."""
        order = self._order * factor if order is None else order
        zero = GroupRingElement.zero(self._group)
        result = [zero] * (order + 1)

        for n, coefficient in enumerate(self._coefficients):
            if n * factor > order:
                break
            result[n * factor] = coefficient

        return TruncatedSeries(self._group, order, result)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self._group, order, self._coefficients)

    def map(
        self, function: Callable[[GroupRingElement], GroupRingElement]
    ) -> "TruncatedSeries":
        """Apply a ring homomorphism coefficientwise."""
        images = [function(coefficient) for coefficient in self._coefficients]
        return TruncatedSeries(images[0].group, self._order, images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        return (
            self._group == other._group
            and self._order == other._order
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash((self._group, self._order, self._coefficients))

    def __str__(self) -> str:
        return serialize_series(self)

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries({self._group}, {self._order}, "
            f"{serialize_series(self)!r})"
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def serialize_series(series: TruncatedSeries) -> str:
    """``1 + (elt)T^k`` for each nonzero coefficient, in increasing degree."""
    parts = ["1"]

    for degree, coefficient in enumerate(series.coefficients):
        if degree and coefficient:
            parts.append(f"({serialize_element(coefficient)})T^{degree}")

    return " + ".join(parts)


_MONOMIAL = re.compile(
    r"^(?P<coefficient>.*?)\s*\*?\s*T(?:\^(?P<degree>\d+))?$"
)


def _split_terms(text: str) -> List[str]:
    """Split at the signs that are not nested in brackets."""
    chunks = []
    depth = 0
    start = 0

    for position, character in enumerate(text):
        if character in "({":
            depth += 1
        elif character in ")}":
            depth -= 1
        elif (
            character in "+-"
            and depth == 0
            and text[start:position].strip(" +-")
        ):
            chunks.append(text[start:position])
            start = position

    chunks.append(text[start:])
    return chunks


def _parse_coefficient(text: str, group: GradingGroup) -> GroupRingElement:
    if not text:
        return GroupRingElement.one(group)

    try:
        return parse_element(text, group)
    except error.ElementSyntaxError:
        if text.startswith("(") and text.endswith(")"):
            return parse_element(text[1:-1], group)
        raise


def parse_series(
    text: str, group: GradingGroup, order: int
) -> TruncatedSeries:
    """Read a series such as ``1 - T``, ``1 + {1/2}T + 2{0}T^2`` or the
    canonical serialization."""
    coefficients = [GroupRingElement.zero(group) for _ in range(order + 1)]

    if not text.strip():
        raise error.ElementSyntaxError("empty series")

    for chunk in _split_terms(text.strip()):
        chunk = chunk.strip()
        body = chunk.lstrip(" +-")
        sign = -1 if chunk[: len(chunk) - len(body)].count("-") % 2 else 1

        if not body:
            raise error.ElementSyntaxError(f"dangling sign in {text!r}")

        match = _MONOMIAL.match(body)

        if match:
            degree = int(match.group("degree") or 1)
            coefficient = _parse_coefficient(
                match.group("coefficient").strip(), group
            )
        else:
            degree = 0
            coefficient = _parse_coefficient(body, group)

        if degree > order:
            log.debug(
                "parse_series: dropping degree %d above %d", degree, order
            )
            continue

        coefficients[degree] = coefficients[degree] + coefficient * sign

    if coefficients[0] != GroupRingElement.one(group):
        raise error.SeriesError(
            f"series {text!r} has constant term {coefficients[0]}, "
            "expected the unit"
        )

    return TruncatedSeries(group, order, coefficients)
