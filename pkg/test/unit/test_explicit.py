from itertools import permutations

import pytest

from orbispec import error
from orbispec.algebra.ring import TRIPLE, GroupRingElement, parse_element
from orbispec.group.finite import FiniteGroup
from orbispec.spectrum.explicit import (
    ExplicitGSet,
    brieskorn_zero_dim,
    cartesian_power,
    node_from_explicit,
)
from orbispec.spectrum.tower import e_k, higher_euler_count


def triple(text: str) -> GroupRingElement:
    return parse_element(text, TRIPLE)


@pytest.fixture
def s3() -> FiniteGroup:
    elements = list(permutations(range(3)))

    return FiniteGroup.from_function(
        elements, lambda a, b: tuple(a[b[i]] for i in range(3))
    )


@pytest.fixture
def swap() -> FiniteGroup:
    return FiniteGroup([[0, 1], [1, 0]], ["e", "(12)"])


def test_brieskorn_two_points():
    space = brieskorn_zero_dim(2, 1)

    assert space.size == 2
    assert space.group.order == 1
    assert space.quotient_hodge() == triple("{0,0,0} + {1/2,0,0}")


def test_brieskorn_with_the_full_group():
    space = brieskorn_zero_dim(3, 3)

    assert space.orbits() == [(0, 1, 2)]
    assert space.fixed_points(1) == []
    assert space.quotient_hodge() == triple("{0,0,0}")
    assert e_k(node_from_explicit(space, 2), 2) == triple("{0,0,0}")


def test_brieskorn_rotation_of_four_points():
    space = brieskorn_zero_dim(4, 2)

    assert space.orbits() == [(0, 2), (1, 3)]
    assert space.quotient_hodge() == triple("{0,0,0} + {1/2,0,0}")


def test_brieskorn_limits():
    with pytest.raises(error.GroupTableError):
        brieskorn_zero_dim(3, 2)

    with pytest.raises(ValueError):
        brieskorn_zero_dim(0, 1)


def test_from_generators(swap):
    space = ExplicitGSet.from_generators(swap, 3, {1: [1, 0, 2]}, [0, 1, 2])

    assert space.action == ((0, 1, 2), (1, 0, 2))
    assert space.orbits() == [(0, 1), (2,)]
    assert space.fixed_points(1) == [2]
    assert space.quotient_hodge() == triple("2{0,0,0}")


def test_from_generators_of_s3(s3):
    transposition = s3.names.index(str((1, 0, 2)))
    rotation = s3.names.index(str((1, 2, 0)))

    space = ExplicitGSet.from_generators(
        s3,
        3,
        {transposition: [1, 0, 2], rotation: [1, 2, 0]},
        [0, 1, 2],
    )

    assert space.orbits() == [(0, 1, 2)]
    assert sorted(len(space.fixed_points(g)) for g in range(6)) == [
        0,
        0,
        1,
        1,
        1,
        3,
    ]


def test_generators_must_define_an_action(swap):
    with pytest.raises(error.ActionError, match="homomorphism"):
        ExplicitGSet.from_generators(swap, 3, {1: [1, 2, 0]}, [0, 1, 2])

    with pytest.raises(error.ActionError, match="permutation"):
        ExplicitGSet.from_generators(swap, 2, {1: [0, 0]}, [0, 1])

    with pytest.raises(error.ActionError, match="not an element"):
        ExplicitGSet.from_generators(swap, 2, {2: [1, 0]}, [0, 1])

    with pytest.raises(error.GroupTableError):
        ExplicitGSet.from_generators(swap, 2, {}, [0, 1])


def test_action_is_checked(swap):
    with pytest.raises(error.ActionError, match="identity"):
        ExplicitGSet(swap, [[1, 0], [1, 0]], [0, 1])

    with pytest.raises(error.ActionError):
        ExplicitGSet(swap, [[0, 1]], [0, 1])

    with pytest.raises(error.ActionError):
        ExplicitGSet(swap, [[0, 1], [1, 0]], [0, 0])


def test_phi_must_commute(swap):
    with pytest.raises(error.CommutationError):
        ExplicitGSet(swap, [[0, 1, 2], [1, 0, 2]], [2, 1, 0])


def test_restrict(swap):
    space = ExplicitGSet(swap, [[0, 1, 2, 3], [1, 0, 2, 3]], [0, 1, 3, 2])
    trivial, members = swap.subgroup([0])
    restricted = space.restrict(trivial, members, [2, 3])

    assert restricted.size == 2
    assert restricted.phi == (1, 0)
    assert restricted.quotient_hodge() == triple("{0,0,0} + {1/2,0,0}")


def test_tower_of_a_reflection(swap):
    space = ExplicitGSet(swap, [[0, 1, 2], [1, 0, 2]], [0, 1, 2])
    node = node_from_explicit(space, 1)

    # the fixed point 2 is counted once more in the twisted sector
    assert e_k(node, 1) == triple("3{0,0,0}")


def test_tower_skips_classes_without_fixed_points(swap):
    space = ExplicitGSet(swap, [[0, 1], [1, 0]], [1, 0])
    node = node_from_explicit(space, 1)

    assert list(node.children) == [(0, 0)]
    assert e_k(node, 1) == triple("{0,0,0}")


def test_node_from_explicit_depth(swap):
    space = ExplicitGSet(swap, [[0], [0]], [0])

    assert node_from_explicit(space, 0).children == {}

    with pytest.raises(error.DepthError):
        node_from_explicit(space, -1)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_point_counts_commuting_tuples(s3, k):
    point = ExplicitGSet(s3, [[0]] * 6, [0])
    e = e_k(node_from_explicit(point, k), k)

    assert e == triple("{0,0,0}") * higher_euler_count(s3, k)


def test_cartesian_power_is_an_action():
    space = brieskorn_zero_dim(2, 2)
    square = cartesian_power(space, 2)

    assert square.size == 4
    assert square.group.order == 8

    # rebuild with every check switched on
    ExplicitGSet(square.group, square.action, square.phi)


def test_cartesian_power_quotient():
    square = cartesian_power(brieskorn_zero_dim(2, 1), 2)

    # S²{0, 1/2}: the swap exchanges 00 and 11 and fixes 01
    assert square.quotient_hodge() == triple("2{0,0,0} + {1/2,0,0}")


def test_cartesian_power_bound():
    with pytest.raises(error.WreathSizeError):
        cartesian_power(brieskorn_zero_dim(3, 3), 3, bound=10)
