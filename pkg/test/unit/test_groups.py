from itertools import permutations

import pytest

from orbispec import error
from orbispec.group.finite import FiniteGroup, centralizer, conjugacy_classes
from orbispec.group.wreath import (
    cycle_products,
    wreath_class_type,
    wreath_product,
    wreath_size,
)
from orbispec.spectrum.tower import commuting_tuple_count, higher_euler_count


def symmetric_group(degree: int) -> FiniteGroup:
    elements = list(permutations(range(degree)))

    return FiniteGroup.from_function(
        elements, lambda a, b: tuple(a[b[i]] for i in range(degree))
    )


def test_cyclic_group():
    group = FiniteGroup.cyclic(4)

    assert group.order == 4
    assert group.identity == 0
    assert group.multiply(3, 2) == 1
    assert group.inverse(1) == 3
    assert group.is_abelian()
    assert len(conjugacy_classes(group)) == 4


def test_symmetric_group():
    group = symmetric_group(3)
    conjugacy = conjugacy_classes(group)

    assert group.order == 6
    assert not group.is_abelian()
    assert sorted(len(members) for members in conjugacy.classes) == [1, 2, 3]
    assert sorted(len(c) for c in conjugacy.centralizers) == [2, 3, 6]
    assert conjugacy.class_of(group.identity) == 0


def test_conjugacy_classes_are_cached():
    group = symmetric_group(3)

    assert conjugacy_classes(group) is conjugacy_classes(group)


def test_centralizer():
    group = symmetric_group(3)
    transposition = group.names.index(str((1, 0, 2)))

    assert len(centralizer(group, transposition)) == 2
    assert centralizer(group, group.identity) == tuple(range(6))


def test_subgroup():
    group = FiniteGroup.cyclic(4)
    subgroup, members = group.subgroup([2, 0])

    assert members == (0, 2)
    assert subgroup.order == 2
    assert subgroup.multiply(1, 1) == 0

    with pytest.raises(error.GroupTableError):
        group.subgroup([0, 1])


@pytest.mark.parametrize(
    "table",
    [
        [],
        [[0, 1]],
        [[0, 1], [1, 2]],
        [[1, 0], [0, 0]],
        [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
    ],
)
def test_invalid_tables(table):
    with pytest.raises(error.GroupTableError):
        FiniteGroup(table)


def test_non_associative_table():
    # a Latin square with identity 0 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]

    with pytest.raises(error.GroupTableError, match="associative"):
        FiniteGroup(table)


def test_wreath_size_and_bound():
    base = FiniteGroup.cyclic(3)

    assert wreath_size(base, 3) == 162
    assert wreath_product(base, 3).order == 162

    with pytest.raises(error.WreathSizeError):
        wreath_product(base, 3, bound=100)


def test_wreath_of_degree_one_is_the_base():
    base = symmetric_group(3)

    assert wreath_product(base, 1).table == base.table


def test_wreath_group_axioms():
    wreath = wreath_product(FiniteGroup.cyclic(2), 2)

    # the constructor skips the associativity check, redo it here
    FiniteGroup(wreath.table)


def test_hyperoctahedral_group_has_five_classes():
    wreath = wreath_product(FiniteGroup.cyclic(2), 2)

    assert wreath.order == 8
    assert len(conjugacy_classes(wreath)) == 5


def test_cycle_products():
    wreath = wreath_product(FiniteGroup.cyclic(3), 2)
    index = next(
        index
        for index in range(wreath.order)
        if wreath.element(index)[0] == (1, 1)
        and wreath.element(index)[1].array_form == [1, 0]
    )

    assert cycle_products(wreath, index) == [(2, 2)]
    assert cycle_products(wreath, wreath.identity) == [(0, 1), (0, 1)]


@pytest.mark.parametrize(
    "base",
    [FiniteGroup.cyclic(1), FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)],
)
@pytest.mark.parametrize("degree", [1, 2, 3])
def test_wreath_class_type_classifies_conjugacy(base, degree):
    wreath = wreath_product(base, degree)
    conjugacy = conjugacy_classes(wreath)
    types = [
        sorted(wreath_class_type(wreath, index).items())
        for index in range(wreath.order)
    ]

    for a in range(wreath.order):
        for b in range(a, wreath.order):
            assert (types[a] == types[b]) == (
                conjugacy.class_of(a) == conjugacy.class_of(b)
            )


def test_wreath_class_type_of_symmetric_base():
    wreath = wreath_product(symmetric_group(3), 2)
    conjugacy = conjugacy_classes(wreath)
    types = {
        tuple(sorted(wreath_class_type(wreath, representative).items()))
        for representative in conjugacy.representatives
    }

    # pairs of classes of S₃ for the identity, one class per 2-cycle
    assert len(types) == len(conjugacy) == 6 + 3


@pytest.mark.parametrize(
    "group,length,expected",
    [
        (FiniteGroup.cyclic(3), 2, 9),
        (symmetric_group(3), 0, 1),
        (symmetric_group(3), 1, 6),
        (symmetric_group(3), 2, 18),
        (symmetric_group(3), 3, 48),
    ],
)
def test_commuting_tuple_count(group, length, expected):
    assert commuting_tuple_count(group, length) == expected


def test_higher_euler_count():
    group = symmetric_group(3)

    assert higher_euler_count(group, 0) == 1
    assert higher_euler_count(group, 1) == len(conjugacy_classes(group))
    assert higher_euler_count(group, 2) == 8
