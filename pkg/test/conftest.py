import functools
import random
from typing import Callable

import pytest

from orbispec import path
from orbispec.algebra.ring import CYCLIC, GradingGroup, GroupRingElement, Kind
from orbispec.workspace.manager import WorkspaceManager


@pytest.fixture(scope="session")
def bundled() -> WorkspaceManager:
    return WorkspaceManager.load(path.bundled_workspace)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def _coordinate(rng: random.Random, kind: Kind, denominator: int) -> str:
    if kind is Kind.CYCLIC:
        return f"{rng.randrange(denominator)}/{denominator}"
    if kind is Kind.RATIONAL:
        return f"{rng.randint(0, 4)}/2"
    return str(rng.randint(-2, 2))


def random_element(
    rng: random.Random,
    denominator: int = 6,
    terms: int = 3,
    effective: bool = False,
    group: GradingGroup = CYCLIC,
) -> GroupRingElement:
    """A small element of ℤ[A]; ℚ/ℤ coordinates lie in (1/denominator)ℤ/ℤ,
    ℚ coordinates in {0, 1/2, ..., 2}."""
    low = 1 if effective else -2

    return GroupRingElement(
        group,
        [
            (
                tuple(
                    _coordinate(rng, kind, denominator)
                    for kind in group.signature
                ),
                rng.randint(low, 2),
            )
            for _ in range(rng.randint(1, terms))
        ],
    )


@pytest.fixture(name="random_element")
def random_element_fixture(
    rng: random.Random,
) -> Callable[..., GroupRingElement]:
    return functools.partial(random_element, rng)


@pytest.fixture
def make_element() -> Callable[..., GroupRingElement]:
    """``random_element`` for a generator of the test's own choosing."""
    return random_element
