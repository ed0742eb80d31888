"""The group ring ℤ[A] of a grading group A built from cyclic (ℚ/ℤ), rational
(ℚ) and integer (ℤ) coordinates, and the semiring of finite sets with maps
into A that it is the Grothendieck ring of.

Elements are finite sums Σ kₐ{a}. They are kept canonical at all times: the
cyclic coordinates of every label are reduced into [0, 1) and no stored
coefficient is zero, so equality is structural."""

import enum
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Sequence,
    Tuple,
    Union,
)

from orbispec import error, logger
from orbispec.algebra.rational import as_rational, format_rational

log = logger.get_logger(__name__)

Label = Tuple[Fraction, ...]
LabelLike = Union[Sequence[Union[int, str, Fraction]], int, str, Fraction]
LabelMap = Callable[[Label], LabelLike]


class Kind(str, enum.Enum):
    CYCLIC = "cyclic"
    RATIONAL = "rational"
    INTEGER = "integer"


@dataclass(frozen=True)
class GradingGroup:
    """A finite product of ℚ/ℤ, ℚ and ℤ, described by its signature."""

    signature: Tuple[Kind, ...]

    @classmethod
    def parse(cls, text: str) -> "GradingGroup":
        """Read a signature such as ``"cyclic,rational"``."""
        text = text.strip()
        if not text:
            return cls(())

        try:
            return cls(
                tuple(Kind(part.strip().lower()) for part in text.split(","))
            )
        except ValueError:
            raise error.SignatureError(
                f"unknown signature {text!r}, "
                "use a comma separated list of cyclic, rational and integer"
            )

    def __str__(self) -> str:
        return ",".join(kind.value for kind in self.signature)

    def __len__(self) -> int:
        return len(self.signature)

    def normalize(self, coordinates: LabelLike) -> Label:
        """Turn ``coordinates`` into the canonical label of this group."""
        if isinstance(coordinates, (int, str, Fraction)):
            coordinates = (coordinates,)

        coordinates = tuple(coordinates)

        if len(coordinates) != len(self.signature):
            raise error.SignatureError(
                f"label {coordinates!r} has {len(coordinates)} coordinates, "
                f"signature {self} has {len(self.signature)}"
            )

        label = []

        for kind, value in zip(self.signature, coordinates):
            try:
                rational = as_rational(value)
            except (TypeError, ValueError, ZeroDivisionError):
                raise error.SignatureError(
                    f"coordinate {value!r} is not an exact rational"
                )

            if kind is Kind.CYCLIC:
                rational -= math.floor(rational)
            elif kind is Kind.INTEGER and rational.denominator != 1:
                raise error.SignatureError(
                    f"coordinate {value!r} is not an integer"
                )

            label.append(rational)

        return tuple(label)

    def zero(self) -> Label:
        return tuple(Fraction(0) for _ in self.signature)

    def add(self, left: Label, right: Label) -> Label:
        return tuple(
            _reduce(kind, a + b)
            for kind, a, b in zip(self.signature, left, right)
        )

    def scale(self, factor: int, label: Label) -> Label:
        return tuple(
            _reduce(kind, factor * a) for kind, a in zip(self.signature, label)
        )

    def subgroup(self, keep: Sequence[int]) -> "GradingGroup":
        """The factor made of the coordinates listed in ``keep``."""
        keep = tuple(keep)

        if any(b <= a for a, b in zip(keep, keep[1:])) or any(
            index < 0 or index >= len(self.signature) for index in keep
        ):
            raise error.SignatureError(
                f"coordinate subset {keep!r} is not an increasing subset of "
                f"0..{len(self.signature) - 1}"
            )

        return GradingGroup(tuple(self.signature[index] for index in keep))


def _reduce(kind: Kind, value: Fraction) -> Fraction:
    if kind is Kind.CYCLIC:
        return value - math.floor(value)

    return value


TRIVIAL = GradingGroup(())
CYCLIC = GradingGroup((Kind.CYCLIC,))
SPECTRUM = GradingGroup((Kind.RATIONAL,))
PAIR = GradingGroup((Kind.CYCLIC, Kind.RATIONAL))
TRIPLE = GradingGroup((Kind.CYCLIC, Kind.RATIONAL, Kind.RATIONAL))
CYCLIC_INTEGER = GradingGroup((Kind.CYCLIC, Kind.INTEGER))


def format_label(label: Label) -> str:
    return "(" + ",".join(format_rational(value) for value in label) + ")"


class GroupRingElement:
    """An element Σ kₐ{a} of ℤ[A]. Instances are immutable."""

    __slots__ = ("_group", "_terms")

    def __init__(
        self,
        group: GradingGroup,
        terms: Union[
            Mapping[LabelLike, int], Iterable[Tuple[LabelLike, int]], None
        ] = None,
    ) -> None:
        self._group = group
        accumulated: Dict[Label, int] = {}

        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms

            for coordinates, coefficient in items:
                label = group.normalize(coordinates)
                accumulated[label] = accumulated.get(label, 0) + int(
                    coefficient
                )

        self._terms = {
            label: value for label, value in accumulated.items() if value
        }

    @classmethod
    def _canonical(
        cls, group: GradingGroup, terms: Dict[Label, int]
    ) -> "GroupRingElement":
        element = cls.__new__(cls)
        element._group = group
        element._terms = {
            label: value for label, value in terms.items() if value
        }
        return element

    @classmethod
    def zero(cls, group: GradingGroup) -> "GroupRingElement":
        return cls._canonical(group, {})

    @classmethod
    def one(cls, group: GradingGroup) -> "GroupRingElement":
        """The unit {0}."""
        return cls._canonical(group, {group.zero(): 1})

    @classmethod
    def monomial(
        cls, group: GradingGroup, coordinates: LabelLike, coefficient: int = 1
    ) -> "GroupRingElement":
        return cls(group, [(coordinates, coefficient)])

    @property
    def group(self) -> GradingGroup:
        return self._group

    @property
    def terms(self) -> List[Tuple[Label, int]]:
        """The nonzero terms, sorted lexicographically by label."""
        return sorted(self._terms.items())

    def support(self) -> List[Label]:
        return sorted(self._terms)

    def coefficient(self, coordinates: LabelLike) -> int:
        return self._terms.get(self._group.normalize(coordinates), 0)

    def is_effective(self) -> bool:
        return all(value > 0 for value in self._terms.values())

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def _check(self, other: "GroupRingElement") -> None:
        if self._group != other._group:
            raise error.SignatureError(
                f"cannot combine elements of {self._group} and {other._group}"
            )

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented

        self._check(other)
        terms = dict(self._terms)

        for label, value in other._terms.items():
            terms[label] = terms.get(label, 0) + value

        return GroupRingElement._canonical(self._group, terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement._canonical(
            self._group, {label: -value for label, value in self._terms.items()}
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented

        return self + (-other)

    def __mul__(
        self, other: Union["GroupRingElement", int]
    ) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement._canonical(
                self._group,
                {label: other * value for label, value in self._terms.items()},
            )

        if not isinstance(other, GroupRingElement):
            return NotImplemented

        self._check(other)
        add = self._group.add
        terms: Dict[Label, int] = {}

        for left, x in self._terms.items():
            for right, y in other._terms.items():
                label = add(left, right)
                terms[label] = terms.get(label, 0) + x * y

        return GroupRingElement._canonical(self._group, terms)

    def __rmul__(self, other: int) -> "GroupRingElement":
        if isinstance(other, int):
            return self * other

        return NotImplemented

    def __pow__(self, exponent: int) -> "GroupRingElement":
        if exponent < 0:
            raise ValueError("group ring elements have no general inverse")

        result = GroupRingElement.one(self._group)

        for _ in range(exponent):
            result = result * self

        return result

    def shift(self, coordinates: LabelLike) -> "GroupRingElement":
        """Multiply by the monomial {coordinates}."""
        offset = self._group.normalize(coordinates)
        add = self._group.add

        return GroupRingElement._canonical(
            self._group,
            {add(label, offset): value for label, value in self._terms.items()},
        )

    def twist(self, factor: int) -> "GroupRingElement":
        """The Adams operation σₛ: {a} ↦ {s·a}."""
        if factor < 1:
            raise ValueError(f"twist: factor must be positive, got {factor}")

        terms: Dict[Label, int] = {}

        for label, value in self._terms.items():
            scaled = self._group.scale(factor, label)
            terms[scaled] = terms.get(scaled, 0) + value

        return GroupRingElement._canonical(self._group, terms)

    def project(self, keep: Sequence[int]) -> "GroupRingElement":
        """Push forward along the projection onto the coordinates ``keep``."""
        target = self._group.subgroup(keep)
        terms: Dict[Label, int] = {}

        for label, value in self._terms.items():
            image = tuple(label[index] for index in keep)
            terms[image] = terms.get(image, 0) + value

        return GroupRingElement._canonical(target, terms)

    def map_labels(
        self, group: GradingGroup, function: LabelMap
    ) -> "GroupRingElement":
        """Push forward along a map of grading groups given on labels."""
        return GroupRingElement(
            group,
            [(function(label), value) for label, value in self._terms.items()],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented

        return self._group == other._group and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._group, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[Label, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        return serialize_element(self)

    def __repr__(self) -> str:
        return f"GroupRingElement({self._group}, {serialize_element(self)!r})"


@dataclass(frozen=True)
class EffectiveMapClass:
    """The isomorphism class of a finite set X with a map ψ: X → A, recorded
    as the sorted list of the labels ψ(x) with repetition."""

    group: GradingGroup
    points: Tuple[Label, ...]

    @classmethod
    def from_element(cls, element: GroupRingElement) -> "EffectiveMapClass":
        if not element.is_effective():
            raise error.EffectivityError(
                f"{element} has negative coefficients and is not a finite set"
            )

        return cls(
            element.group,
            tuple(
                chain.from_iterable(
                    [label] * value for label, value in element.terms
                )
            ),
        )

    def element(self) -> GroupRingElement:
        return GroupRingElement(self.group, Counter(self.points))

    def __len__(self) -> int:
        return len(self.points)


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def augmentation(x: GroupRingElement) -> int:
    return x.augmentation()


def adams_twist(x: GroupRingElement, factor: int) -> GroupRingElement:
    return x.twist(factor)


def project(x: GroupRingElement, keep: Sequence[int]) -> GroupRingElement:
    return x.project(keep)


def serialize_element(element: GroupRingElement) -> str:
    """Canonical text: ``coeff*(c1,c2)`` terms joined by `` + `` in label
    order, ``0`` for the zero element."""
    if not element:
        return "0"

    return " + ".join(
        f"{value}*{format_label(label)}" for label, value in element.terms
    )


_TERM = re.compile(
    r"\s*(?P<signs>(?:[+-]\s*)*)"
    r"(?P<coefficient>\d+)?\s*\*?\s*"
    r"(?P<label>[({][^(){}]*[)}])?\s*"
)


def _parse_label(text: str, group: GradingGroup) -> Label:
    inner = text[1:-1].strip()
    parts = [part.strip() for part in inner.split(",")] if inner else []

    return group.normalize(parts)


def parse_element(text: str, group: GradingGroup) -> GroupRingElement:
    """Read an element written canonically (``2*(0) + 1*(1/2)``) or in the
    brace shorthand (``2{0} - {1/2}``). A bare integer is a multiple of the
    unit."""
    if not text.strip():
        raise error.ElementSyntaxError("empty group ring element")

    terms: Dict[Label, int] = {}
    position = 0
    first = True

    while position < len(text):
        match = _TERM.match(text, position)

        if (
            not match
            or match.end() == position
            or (
                match.group("coefficient") is None
                and match.group("label") is None
            )
            or (not first and not match.group("signs"))
        ):
            raise error.ElementSyntaxError(
                f"cannot read {text!r} at column {position + 1}"
            )

        sign = -1 if match.group("signs").count("-") % 2 else 1
        coefficient = int(match.group("coefficient") or 1)

        if match.group("label") is None:
            label = group.zero()
        else:
            try:
                label = _parse_label(match.group("label"), group)
            except error.SignatureError as exc:
                raise error.ElementSyntaxError(
                    f"cannot read {text!r} at column {position + 1}: {exc}"
                )

        terms[label] = terms.get(label, 0) + sign * coefficient
        position = match.end()
        first = False

    return GroupRingElement._canonical(group, terms)


def element_from_labels(
    group: GradingGroup, labels: Iterable[LabelLike]
) -> GroupRingElement:
    """The class of the finite set with the given labels."""
    return GroupRingElement(group, [(label, 1) for label in labels])
