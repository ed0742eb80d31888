"""Wreath products G≀Sₙ = Gⁿ ⋊ Sₙ.

An element is a pair (g⃗, σ) with g⃗ ∈ Gⁿ and σ ∈ Sₙ. It acts on Vⁿ by
sending (x₁, …, xₙ) to y with y_{σ(i)} = g_{σ(i)}·xᵢ, which gives the
product (g⃗, σ)(h⃗, τ) = (g⃗·σ(h⃗), στ) with σ(h⃗)ᵢ = h_{σ⁻¹(i)}."""

import math
from collections import Counter
from itertools import permutations, product
from typing import Dict, List, Optional, Tuple

from sympy.combinatorics import Permutation

from orbispec import error, logger
from orbispec.configuration import ConfigurationProvider
from orbispec.group.finite import FiniteGroup, conjugacy_classes

log = logger.get_logger(__name__)

WreathElement = Tuple[Tuple[int, ...], Permutation]
ClassType = Dict[Tuple[int, int], int]


class WreathGroup(FiniteGroup):
    """G≀Sₙ materialized as a multiplication table. Elements are ordered by
    permutation (lexicographically on images) and then by g⃗, so the wreath
    power of degree one has the table of the base group."""

    def __init__(self, base: FiniteGroup, degree: int) -> None:
        if degree < 1:
            raise ValueError(f"wreath degree {degree} is not positive")

        self._base = base
        self._degree = degree
        self._elements: List[WreathElement] = [
            (vector, Permutation(list(images)))
            for images in permutations(range(degree))
            for vector in product(range(base.order), repeat=degree)
        ]
        self._lookup = {
            (vector, tuple(sigma.array_form)): index
            for index, (vector, sigma) in enumerate(self._elements)
        }

        table = [
            [self._product(a, b) for b in self._elements]
            for a in self._elements
        ]

        super().__init__(table, [_name(base, e) for e in self._elements], False)

    @property
    def base(self) -> FiniteGroup:
        return self._base

    @property
    def degree(self) -> int:
        return self._degree

    def element(self, index: int) -> WreathElement:
        return self._elements[index]

    def index_of(self, vector: Tuple[int, ...], sigma: Permutation) -> int:
        return self._lookup[(tuple(vector), tuple(sigma.array_form))]

    def _product(self, left: WreathElement, right: WreathElement) -> int:
        vector, sigma = left
        other, tau = right
        inverse = ~sigma
        multiply = self._base.multiply

        combined = tuple(
            multiply(vector[i], other[inverse(i)]) for i in range(self._degree)
        )
        images = tuple(sigma(tau(i)) for i in range(self._degree))

        return self._lookup[(combined, images)]

    def act(
        self, index: int, point: Tuple[int, ...], action: List[List[int]]
    ) -> Tuple[int, ...]:
        """Apply the element to a point of Xⁿ; ``action[g]`` is the
        permutation of X induced by g."""
        vector, sigma = self._elements[index]
        image = [0] * self._degree

        for i, x in enumerate(point):
            target = sigma(i)
            image[target] = action[vector[target]][x]

        return tuple(image)


def _name(base: FiniteGroup, element: WreathElement) -> str:
    vector, sigma = element
    labels = ",".join(base.names[g] for g in vector)

    return f"({labels};{sigma.array_form})"


def wreath_size(base: FiniteGroup, degree: int) -> int:
    return base.order**degree * math.factorial(degree)


def wreath_product(
    base: FiniteGroup, degree: int, bound: Optional[int] = None
) -> WreathGroup:
    """Materialize G≀Sₙ, refusing anything above the size bound."""
    if bound is None:
        bound = ConfigurationProvider.get_config().wreath_bound

    size = wreath_size(base, degree)

    if size > bound:
        raise error.WreathSizeError(
            f"wreath product of order {size} exceeds the bound {bound}"
        )

    log.debug("wreath_product: order %d, degree %d", size, degree)

    return WreathGroup(base, degree)


def cycle_products(
    wreath: WreathGroup, index: int
) -> List[Tuple[int, int]]:
    """For each cycle of σ, its length r and the product of the g's around it
    taken in the order the action applies them."""
    vector, sigma = wreath.element(index)
    base = wreath.base
    cycles = []

    for cycle in sigma.full_cyclic_form:
        start = cycle[0]
        total = base.identity
        position = start

        for _ in range(len(cycle)):
            position = sigma(position)
            total = base.multiply(vector[position], total)

        cycles.append((total, len(cycle)))

    return cycles


def wreath_class_type(wreath: WreathGroup, index: int) -> ClassType:
    """The conjugacy invariant of an element of G≀Sₙ: how many r-cycles of σ
    have a cycle product in each conjugacy class of G, keyed (class, r)."""
    conjugacy = conjugacy_classes(wreath.base)

    return dict(
        Counter(
            (conjugacy.class_of(total), length)
            for total, length in cycle_products(wreath, index)
        )
    )
