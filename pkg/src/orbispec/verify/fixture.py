"""Fixtures for the wreath product equation: an explicit zero dimensional
triple, or a declared node of known dimension."""

import pathlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from orbispec import error, logger
from orbispec.algebra.rational import as_rational
from orbispec.algebra.ring import TRIPLE, GroupRingElement, parse_element
from orbispec.spectrum.explicit import (
    ExplicitGSet,
    cartesian_power,
    node_from_explicit,
)
from orbispec.spectrum.tower import TripleNode, e_k
from orbispec.workspace.utils import load_toml

log = logger.get_logger(__name__)


@dataclass
class Theorem2Fixture:
    name: str
    dimension: int
    space: Optional[ExplicitGSet] = None
    node: Optional[TripleNode] = None
    _nodes: Dict[int, TripleNode] = field(default_factory=dict, repr=False)

    @classmethod
    def from_explicit(cls, name: str, space: ExplicitGSet) -> "Theorem2Fixture":
        return cls(name, 0, space=space)

    @classmethod
    def from_node(cls, name: str, node: TripleNode) -> "Theorem2Fixture":
        if node.dimension is None:
            raise error.UnsupportedError(
                f"{name}: the wreath equation needs a pure dimension, the "
                "node is declared mixed"
            )

        return cls(name, node.dimension, node=node)

    @property
    def explicit(self) -> bool:
        return self.space is not None

    def base_node(self, k: int) -> TripleNode:
        """The node of (V, G, φ) carrying at least order k."""
        if self.node is not None:
            return self.node

        assert self.space is not None
        if k not in self._nodes:
            self._nodes[k] = node_from_explicit(self.space, k)

        return self._nodes[k]

    def invariant(self, k: int) -> GroupRingElement:
        """e⁽ᵏ⁾(V, G, φ)."""
        return e_k(self.base_node(k), k)

    def power_node(
        self, degree: int, k: int, bound: Optional[int] = None
    ) -> TripleNode:
        """The node of (Vⁿ, G≀Sₙ, φ⁽ⁿ⁾) for an explicit fixture."""
        if self.space is None:
            raise error.UnsupportedError(
                f"{self.name}: wreath powers are only materialized for "
                "explicit fixtures"
            )

        return node_from_explicit(
            cartesian_power(self.space, degree, bound), k
        )


def _marker(age: Fraction) -> GroupRingElement:
    return GroupRingElement.monomial(TRIPLE, (0, age, age))


def load_geometric_fixture(
    path: Union[str, pathlib.Path]
) -> Tuple[int, int, GroupRingElement]:
    """Read a hand-derived class-by-class record and return (dimension,
    degree, Σ e(quotient)·{(0, age, age)})."""
    document = load_toml(path)

    try:
        dimension = int(document["dimension"])
        degree = int(document["degree"])
        classes = document["classes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise error.WorkspaceError(
            f"missing or malformed key {exc}", str(path)
        )

    total = GroupRingElement.zero(TRIPLE)

    for position, entry in enumerate(classes):
        location = f"{path}: classes[{position}]"
        try:
            quotient = parse_element(entry["quotient"], TRIPLE)
            age = as_rational(entry["age"])
        except (KeyError, ValueError) as exc:
            raise error.WorkspaceError(str(exc), location)

        total = total + quotient * _marker(age)

    log.debug("load_geometric_fixture: %d classes from %s", len(classes), path)

    return dimension, degree, total
