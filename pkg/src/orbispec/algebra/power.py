"""The λ-ring structure on ℤ[A] and the power structure it induces on series
1 + T·ℤ[A][[T]].

Every series A(T) with constant term 1 factors uniquely as a product
Π_s λ_{c_s}(T^s) and the power A(T)^m is defined on that factorization.
Two ways of letting the exponent act are offered: *substitution* uses
λ_{c_s·m}(T^s) and *geometric* uses λ_{c_s·σ_s(m)}(T^s). On finite sets the
geometric mode agrees with the explicit combinatorial formula of
``power_direct_formula``."""

import enum
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from typing import Dict, Iterator, List, Optional, Tuple

from sympy.utilities.iterables import partitions

from orbispec import error, logger
from orbispec.algebra.ring import (
    EffectiveMapClass,
    GradingGroup,
    GroupRingElement,
    Label,
    LabelLike,
)
from orbispec.algebra.series import TruncatedSeries

log = logger.get_logger(__name__)


class Mode(str, enum.Enum):
    SUBSTITUTION = "substitution"
    GEOMETRIC = "geometric"


def sym_power_effective(a: EffectiveMapClass, n: int) -> GroupRingElement:
    """Sⁿ(X, ψ) by enumerating n-element multisets of the points of X."""
    if n < 0:
        raise ValueError(f"sym_power_effective: negative power {n}")

    group = a.group
    counts: Dict[Label, int] = Counter()

    for choice in combinations_with_replacement(range(len(a.points)), n):
        label = group.zero()
        for index in choice:
            label = group.add(label, a.points[index])
        counts[label] += 1

    return GroupRingElement(group, counts)


def _geometric_factor(
    group: GradingGroup, label: Label, multiplicity: int, order: int
) -> TruncatedSeries:
    """(1 − {label}T)^(−multiplicity) = Σ C(n+k−1, n){n·label}Tⁿ."""
    coefficients = [
        GroupRingElement._canonical(
            group,
            {group.scale(n, label): math.comb(n + multiplicity - 1, n)},
        )
        for n in range(order + 1)
    ]

    return TruncatedSeries(group, order, coefficients)


def lambda_series(a: GroupRingElement, order: int) -> TruncatedSeries:
    """λ_a(T) = Π_{a} (1 − {a}T)^(−kₐ), truncated at ``order``."""
    group = a.group
    positive = TruncatedSeries.one(group, order)
    negative = TruncatedSeries.one(group, order)

    for label, value in a.terms:
        factor = _geometric_factor(group, label, abs(value), order)
        if value > 0:
            positive = positive * factor
        else:
            negative = negative * factor

    if len(negative.coefficients) > 1 and any(negative.coefficients[1:]):
        return positive * negative.inverse()

    return positive


def expand_neg_power(
    shift: LabelLike,
    level: int,
    exponent: GroupRingElement,
    mode: Mode,
    order: int,
) -> TruncatedSeries:
    """(1 − {shift}T^level)^(−exponent), with the exponent twisted by σ_level
    in geometric mode.

    The n-th coefficient of λ_exponent is placed in degree level·n and
    multiplied by {n·shift}."""
    if level < 1:
        raise ValueError(f"expand_neg_power: level {level} is not positive")

    group = exponent.group
    offset = group.normalize(shift)

    if level > order:
        return TruncatedSeries.one(group, order)

    if Mode(mode) is Mode.GEOMETRIC:
        exponent = exponent.twist(level)

    base = lambda_series(exponent, order // level)
    coefficients = [GroupRingElement.zero(group) for _ in range(order + 1)]

    for n, coefficient in enumerate(base.coefficients):
        coefficients[level * n] = coefficient.shift(group.scale(n, offset))

    return TruncatedSeries(group, order, coefficients)


@dataclass(frozen=True)
class Factorization:
    """A(T) = Π_s λ_{c_s}(T^s); only levels with c_s ≠ 0 are recorded."""

    group: GradingGroup
    order: int
    levels: Tuple[Tuple[int, GroupRingElement], ...]

    def recompose(self) -> TruncatedSeries:
        result = TruncatedSeries.one(self.group, self.order)

        for level, coefficient in self.levels:
            result = result * expand_neg_power(
                self.group.zero(),
                level,
                coefficient,
                Mode.SUBSTITUTION,
                self.order,
            )

        return result

    def level(self, level: int) -> GroupRingElement:
        for candidate, coefficient in self.levels:
            if candidate == level:
                return coefficient

        return GroupRingElement.zero(self.group)


def factorize(a: TruncatedSeries) -> Factorization:
    """Peel off λ_{c_s}(T^s) level by level; c_s is the T^s coefficient of
    what remains after the lower levels are divided out."""
    group = a.group
    remainder = a
    levels = []

    for level in range(1, a.order + 1):
        coefficient = remainder[level]
        if not coefficient:
            continue

        levels.append((level, coefficient))
        remainder = (
            remainder
            * expand_neg_power(
                group.zero(), level, coefficient, Mode.SUBSTITUTION, a.order
            ).inverse()
        )

    log.debug("factorize: %d nonzero levels up to %d", len(levels), a.order)

    return Factorization(group, a.order, tuple(levels))


def power_expand(
    a: TruncatedSeries,
    m: GroupRingElement,
    mode: Mode = Mode.SUBSTITUTION,
    order: Optional[int] = None,
) -> TruncatedSeries:
    """A(T)^m through the factorization of A."""
    if a.group != m.group:
        raise error.SignatureError(
            f"series over {a.group} raised to an exponent in {m.group}"
        )

    if order is not None and order != a.order:
        a = a.truncate(order)

    geometric = Mode(mode) is Mode.GEOMETRIC
    result = TruncatedSeries.one(a.group, a.order)

    for level, coefficient in factorize(a).levels:
        exponent = coefficient * (m.twist(level) if geometric else m)
        result = result * expand_neg_power(
            a.group.zero(), level, exponent, Mode.SUBSTITUTION, a.order
        )

    return result


def _level_profiles(
    degree: int, available: List[int]
) -> Iterator[Dict[int, int]]:
    """The ways of writing degree = Σ i·nᵢ using only available levels i."""
    for profile in partitions(degree):
        profile = dict(profile)
        if all(level in available for level in profile):
            yield profile


def power_direct_formula(
    a: TruncatedSeries, m: EffectiveMapClass, order: Optional[int] = None
) -> TruncatedSeries:
    """The combinatorial power structure for effective A and m: the Tⁿ
    coefficient counts tuples of disjoint point sets Kᵢ ⊂ M with |Kᵢ| = nᵢ,
    Σ i·nᵢ = n, each point decorated by a point of Xᵢ, labelled by
    Σ (i·ψ(y) + ψᵢ(x)), up to reordering inside each Kᵢ."""
    if a.group != m.group:
        raise error.SignatureError(
            f"series over {a.group} raised to an exponent in {m.group}"
        )

    order = a.order if order is None else min(order, a.order)
    group = a.group
    levels = {
        level: EffectiveMapClass.from_element(a[level]).points
        for level in range(1, order + 1)
    }
    available = [level for level, points in levels.items() if points]
    coefficients = [GroupRingElement.one(group)]

    for degree in range(1, order + 1):
        total: Dict[Label, int] = Counter()

        for profile in _level_profiles(degree, available):
            blocks = [
                level for level, count in sorted(profile.items())
                for _ in range(count)
            ]

            if len(blocks) > len(m.points):
                continue

            counts: Dict[Label, int] = Counter()

            for chosen in permutations(range(len(m.points)), len(blocks)):
                for decorations in product(
                    *(levels[level] for level in blocks)
                ):
                    label = group.zero()
                    for level, y, x in zip(blocks, chosen, decorations):
                        label = group.add(
                            label, group.add(group.scale(level, m.points[y]), x)
                        )
                    counts[label] += 1

            symmetry = math.prod(
                math.factorial(count) for count in profile.values()
            )

            for label, value in counts.items():
                total[label] += value // symmetry

        coefficients.append(GroupRingElement(group, total))

    return TruncatedSeries(group, order, coefficients)
