"""Orbifold spectra of every order.

A ``TripleNode`` describes a triple (V, G, φ) by the equivariant
Hodge–Deligne class of the quotient (V/G, φ̂) and, for every conjugacy class
[g] of G and every age β occurring on the fixed locus Vᵍ, the node of the
triple (Vᵍ_β, C_G(g), φ) one order down. The identity class always points
back at the node itself through ``SELF``.

The order-k classes then follow from

    e⁽⁰⁾ = e(V/G, φ̂),  e⁽ᵏ⁾ = Σ_{[g], β} e⁽ᵏ⁻¹⁾(Vᵍ_β, C(g), φ)·{(0, β, β)}

and the spectra from the same recursion with their own base and marker."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

from orbispec import error, logger
from orbispec.algebra.rational import as_rational
from orbispec.algebra.ring import (
    PAIR,
    SPECTRUM,
    TRIPLE,
    GroupRingElement,
    Label,
    format_label,
)
from orbispec.group.finite import FiniteGroup, conjugacy_classes
from orbispec.spectrum.hodge import (
    check_equivariant_hd,
    ehd_to_hsp,
    ehd_to_pair,
)

log = logger.get_logger(__name__)


class SelfMarker:
    """Stands for the node itself at the identity class."""

    _instance: Optional["SelfMarker"] = None

    def __new__(cls) -> "SelfMarker":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SELF"


SELF = SelfMarker()

ChildKey = Tuple[int, Fraction]
Child = Union["TripleNode", SelfMarker]


@dataclass(frozen=True)
class AgeDatum:
    """The exponents βⱼ ∈ [0, 1) of the eigenvalues e[βⱼ] of g on the tangent
    space at a fixed point."""

    exponents: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        exponents = tuple(as_rational(value) for value in self.exponents)

        if any(value < 0 or value >= 1 for value in exponents):
            raise ValueError(f"age exponents {exponents} must lie in [0, 1)")

        object.__setattr__(self, "exponents", exponents)

    @property
    def age(self) -> Fraction:
        return sum(self.exponents, Fraction(0))


def age(datum: AgeDatum) -> Fraction:
    return datum.age


class TripleNode:
    """One level of the fixed-point tower of a triple (V, G, φ)."""

    def __init__(
        self,
        group: FiniteGroup,
        quotient_hodge: GroupRingElement,
        children: Mapping[Tuple[int, Union[int, str, Fraction]], Child],
        depth: int,
        dimension: Optional[int] = None,
        name: Optional[str] = None,
    ) -> None:
        if depth < 0:
            raise error.DepthError(f"node depth {depth} is negative")

        self.group = group
        self.quotient_hodge = check_equivariant_hd(quotient_hodge)
        self.depth = depth
        self.dimension = dimension
        self.name = name
        self.children: Dict[ChildKey, Child] = {
            (int(index), as_rational(beta)): child
            for (index, beta), child in children.items()
        }

        self._validate()

    def _validate(self) -> None:
        conjugacy = conjugacy_classes(self.group)
        identity_class = conjugacy.class_of(self.group.identity)
        label = self.name or "node"

        if self.dimension == 0:
            weighted = _first_weighted_label(self)
            if weighted is not None:
                raise ValueError(
                    f"{label}: a zero dimensional node has only weight "
                    f"(0, 0), found {format_label(weighted)}"
                )

        if self.depth == 0:
            if self.children:
                raise error.DepthError(
                    f"{label}: a node of depth 0 carries no children"
                )
            return

        if self.children.get((identity_class, Fraction(0))) is not SELF:
            raise ValueError(
                f"{label}: the identity class must point at the node itself "
                "with age 0"
            )

        for (index, beta), child in self.children.items():
            if index < 0 or index >= len(conjugacy):
                raise ValueError(
                    f"{label}: class {index} outside 0..{len(conjugacy) - 1}"
                )

            if beta < 0:
                raise ValueError(f"{label}: negative age {beta}")

            if index == identity_class:
                if beta != 0 or child is not SELF:
                    raise ValueError(
                        f"{label}: the identity class only has the node itself"
                    )
                continue

            if child is SELF:
                raise ValueError(
                    f"{label}: only the identity class may point at the node "
                    "itself"
                )

            if self.dimension == 0 and beta != 0:
                raise ValueError(
                    f"{label}: a zero dimensional node has only age 0"
                )

            if child.group.order != len(conjugacy.centralizers[index]):
                raise ValueError(
                    f"{label}: child for class {index} has a group of order "
                    f"{child.group.order}, the centralizer has order "
                    f"{len(conjugacy.centralizers[index])}"
                )

            if child.depth < self.depth - 1:
                raise error.DepthError(
                    f"{label}: child for class {index} has depth "
                    f"{child.depth}, need {self.depth - 1}"
                )

    def __repr__(self) -> str:
        return (
            f"TripleNode(name={self.name!r}, order={self.group.order}, "
            f"depth={self.depth})"
        )


def _first_weighted_label(node: TripleNode) -> Optional[Label]:
    """A label with P or Q nonzero in the quotient class of ``node`` or of any
    node below it."""
    for label, _ in node.quotient_hodge:
        if label[1] != 0 or label[2] != 0:
            return label

    for child in node.children.values():
        if child is not SELF:
            found = _first_weighted_label(child)
            if found is not None:
                return found

    return None


def trivial_node(
    quotient_hodge: GroupRingElement,
    depth: int,
    dimension: Optional[int] = None,
    name: Optional[str] = None,
) -> TripleNode:
    """The triple (V, 1, φ): the only class is the identity."""
    group = FiniteGroup.trivial()
    children = {(0, 0): SELF} if depth >= 1 else {}

    return TripleNode(group, quotient_hodge, children, depth, dimension, name)


def _marker_triple(beta: Fraction) -> GroupRingElement:
    return GroupRingElement.monomial(TRIPLE, (0, beta, beta))


def _marker_pair(beta: Fraction) -> GroupRingElement:
    return GroupRingElement.monomial(PAIR, (0, beta))


def _marker_spectrum(beta: Fraction) -> GroupRingElement:
    return GroupRingElement.monomial(SPECTRUM, (beta,))


def _order_k(
    node: TripleNode,
    k: int,
    base: Callable[[GroupRingElement], GroupRingElement],
    marker: Callable[[Fraction], GroupRingElement],
    cache: Dict[Tuple[int, int], GroupRingElement],
) -> GroupRingElement:
    if k < 0:
        raise ValueError(f"order {k} is negative")

    if k > node.depth:
        raise error.DepthError(
            f"{node.name or 'node'} has depth {node.depth}, order {k} requested"
        )

    key = (id(node), k)
    if key in cache:
        return cache[key]

    if k == 0:
        result = base(node.quotient_hodge)
    else:
        result = GroupRingElement.zero(marker(Fraction(0)).group)

        for (_, beta), child in node.children.items():
            target = node if child is SELF else child
            below = _order_k(target, k - 1, base, marker, cache)
            result = result + below * marker(beta)

    cache[key] = result
    return result


def e_k(node: TripleNode, k: int) -> GroupRingElement:
    """The order-k equivariant orbifold Hodge–Deligne class e⁽ᵏ⁾."""
    return _order_k(node, k, lambda element: element, _marker_triple, {})


def hsp_k(node: TripleNode, k: int) -> GroupRingElement:
    """The order-k orbifold spectrum; base hsp, marker {β}."""
    return _order_k(node, k, ehd_to_hsp, _marker_spectrum, {})


def hsp2_k(node: TripleNode, k: int) -> GroupRingElement:
    """The order-k orbifold pair spectrum; base ē, marker {(0, β)}."""
    return _order_k(node, k, ehd_to_pair, _marker_pair, {})


def hsp3_k(node: TripleNode, k: int) -> GroupRingElement:
    """The order-k orbifold triple spectrum; base e, marker {(0, β, β)}."""
    return _order_k(node, k, lambda element: element, _marker_triple, {})


def commuting_tuple_count(group: FiniteGroup, length: int) -> int:
    """|Hom(ℤ^length, G)|, the number of pairwise commuting tuples."""
    if length <= 0:
        return 1

    conjugacy = conjugacy_classes(group)
    total = 0

    for members, centralizer in zip(conjugacy.classes, conjugacy.centralizers):
        subgroup, _ = group.subgroup(centralizer)
        total += len(members) * commuting_tuple_count(subgroup, length - 1)

    return total


def higher_euler_count(group: FiniteGroup, k: int) -> int:
    """|Hom(ℤ^(k+1), G)|/|G|: the augmentation of e⁽ᵏ⁾ of a point on which G
    acts trivially."""
    return commuting_tuple_count(group, k + 1) // group.order
