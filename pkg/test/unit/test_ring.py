from fractions import Fraction

import pytest

from orbispec import error
from orbispec.algebra.rational import (
    CyclicRational,
    as_rational,
    format_rational,
    rational_split,
)
from orbispec.algebra.ring import (
    CYCLIC,
    CYCLIC_INTEGER,
    PAIR,
    SPECTRUM,
    TRIPLE,
    EffectiveMapClass,
    GradingGroup,
    GroupRingElement,
    Kind,
    adams_twist,
    augmentation,
    gr_mul,
    parse_element,
    project,
    serialize_element,
)


def test_as_rational():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(-2) == Fraction(-2)

    with pytest.raises(TypeError):
        as_rational(0.5)

    with pytest.raises(ZeroDivisionError):
        as_rational("1/0")


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_cyclic_rational():
    assert CyclicRational(Fraction(7, 3)).representative == Fraction(1, 3)
    assert CyclicRational(Fraction(-1, 4)).representative == Fraction(3, 4)
    assert CyclicRational(Fraction(2, 3)) + CyclicRational(Fraction(1, 3)) == (
        CyclicRational(Fraction(0))
    )
    assert CyclicRational(Fraction(1, 6)).scale(3) == CyclicRational(
        Fraction(1, 2)
    )
    assert str(CyclicRational(Fraction(5, 2))) == "1/2"


@pytest.mark.parametrize(
    "value,fractional,whole",
    [
        ("5/2", Fraction(1, 2), 2),
        ("-1/3", Fraction(2, 3), -1),
        (3, Fraction(0), 3),
    ],
)
def test_rational_split(value, fractional, whole):
    cyclic, integer = rational_split(value)

    assert cyclic.representative == fractional
    assert integer == whole


def test_grading_group_parse():
    assert GradingGroup.parse("cyclic, rational,rational") == TRIPLE
    assert GradingGroup.parse("Cyclic") == CYCLIC
    assert len(GradingGroup.parse("")) == 0

    with pytest.raises(error.SignatureError):
        GradingGroup.parse("cyclic,real")


def test_grading_group_normalize():
    assert CYCLIC.normalize("7/3") == (Fraction(1, 3),)
    assert SPECTRUM.normalize("7/3") == (Fraction(7, 3),)

    integer = GradingGroup((Kind.INTEGER,))
    assert integer.normalize(-2) == (Fraction(-2),)

    with pytest.raises(error.SignatureError):
        integer.normalize("1/2")

    with pytest.raises(error.SignatureError):
        TRIPLE.normalize((0, 1))


def test_element_is_canonical():
    a = GroupRingElement(CYCLIC, [("3/2", 1), ("1/2", 2), ("0", 1), (1, -1)])

    assert a == GroupRingElement.monomial(CYCLIC, "1/2", 3)
    assert a.terms == [((Fraction(1, 2),), 3)]
    assert hash(a) == hash(GroupRingElement.monomial(CYCLIC, "1/2", 3))


def test_element_zero():
    a = GroupRingElement(CYCLIC, {"1/3": 2})
    zero = a - a

    assert not zero
    assert len(zero) == 0
    assert zero == GroupRingElement.zero(CYCLIC)
    assert str(zero) == "0"


def test_element_arithmetic():
    half = GroupRingElement.monomial(CYCLIC, "1/2")
    one = GroupRingElement.one(CYCLIC)

    assert half * half == one
    assert gr_mul(half, one + half) == half + one
    assert 3 * half == half * 3 == half + half + half
    assert half**0 == one
    assert half**3 == half
    assert -(one - half) == half - one

    with pytest.raises(ValueError):
        half ** -1


def test_element_rational_labels_do_not_wrap():
    x = GroupRingElement.monomial(SPECTRUM, "2/3")

    assert x * x == GroupRingElement.monomial(SPECTRUM, "4/3")


def test_element_group_mismatch():
    with pytest.raises(error.SignatureError):
        GroupRingElement.one(CYCLIC) + GroupRingElement.one(SPECTRUM)

    with pytest.raises(error.SignatureError):
        GroupRingElement.one(CYCLIC) * GroupRingElement.one(PAIR)


def test_augmentation():
    a = GroupRingElement(TRIPLE, [((0, 1, 1), 3), (("1/2", 0, 0), -1)])

    assert augmentation(a) == a.augmentation() == 2
    assert augmentation(GroupRingElement.zero(TRIPLE)) == 0


def test_twist():
    a = GroupRingElement(CYCLIC, [("1/3", 1), ("2/3", 1), ("1/2", 1)])

    assert a.twist(1) == a
    assert adams_twist(a, 3) == GroupRingElement(CYCLIC, [("0", 2), ("1/2", 1)])
    assert a.twist(6) == GroupRingElement.monomial(CYCLIC, 0, 3)

    with pytest.raises(ValueError):
        a.twist(0)


def test_twist_is_a_ring_homomorphism(random_element):
    for _ in range(20):
        a, b = random_element(), random_element()
        assert (a * b).twist(2) == a.twist(2) * b.twist(2)
        assert (a + b).twist(3) == a.twist(3) + b.twist(3)


def test_shift():
    a = GroupRingElement(TRIPLE, [((0, 0, 0), 1)])

    assert a.shift(("1/2", 1, 1)) == GroupRingElement.monomial(
        TRIPLE, ("1/2", 1, 1)
    )


def test_project():
    a = GroupRingElement(
        TRIPLE, [(("1/2", 1, 1), 1), ((0, 1, 0), 2), ((0, 1, 1), -1)]
    )

    assert a.project((0, 1)) == GroupRingElement(
        PAIR, [(("1/2", 1), 1), ((0, 1), 1)]
    )
    assert a.project(()).group == GradingGroup(())
    assert a.project(()) == GroupRingElement.one(GradingGroup(())) * 2

    with pytest.raises(error.SignatureError):
        a.project((1, 0))

    with pytest.raises(error.SignatureError):
        a.project((3,))


def test_serialize_element():
    a = GroupRingElement(CYCLIC, [("1/2", 1), ("0", 2)])

    assert serialize_element(a) == "2*(0) + 1*(1/2)"
    assert str(GroupRingElement.monomial(PAIR, ("1/3", 2), -1)) == (
        "-1*(1/3,2)"
    )


@pytest.mark.parametrize(
    "text,expected",
    [
        ("2*(0) + 1*(1/2)", [("0", 2), ("1/2", 1)]),
        ("2{0} - {1/2}", [("0", 2), ("1/2", -1)]),
        ("{3/2}", [("1/2", 1)]),
        ("-{1/2}", [("1/2", -1)]),
        ("3", [("0", 3)]),
        ("2*(0) + -1*(1/2)", [("0", 2), ("1/2", -1)]),
        ("{1/4} + {1/4} - - {0}", [("1/4", 2), ("0", 1)]),
    ],
)
def test_parse_element(text, expected):
    assert parse_element(text, CYCLIC) == GroupRingElement(CYCLIC, expected)


def test_parse_element_reads_its_serialization():
    a = GroupRingElement(TRIPLE, [(("1/3", 1, 0), -2), ((0, "3/2", "3/2"), 5)])

    assert parse_element(str(a), TRIPLE) == a


@pytest.mark.parametrize(
    "text", ["", "   ", "{1/2} {0}", "{1,2}", "{x}", "{1/2", "2 3"]
)
def test_parse_element_rejects(text):
    with pytest.raises(error.ElementSyntaxError):
        parse_element(text, CYCLIC)


def test_effective_map_class():
    a = GroupRingElement(CYCLIC, [("1/2", 2), ("0", 1)])
    points = EffectiveMapClass.from_element(a)

    assert len(points) == 3
    assert points.points == (
        (Fraction(0),),
        (Fraction(1, 2),),
        (Fraction(1, 2),),
    )
    assert points.element() == a

    with pytest.raises(error.EffectivityError):
        EffectiveMapClass.from_element(a - GroupRingElement.one(CYCLIC) * 2)


GROUPS = [CYCLIC, PAIR, TRIPLE, CYCLIC_INTEGER]


@pytest.mark.parametrize("group", GROUPS, ids=str)
def test_ring_axioms(rng, make_element, group):
    one = GroupRingElement.one(group)
    zero = GroupRingElement.zero(group)

    for _ in range(25):
        a, b, c = (make_element(rng, group=group) for _ in range(3))

        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a == gr_mul(b, a)
        assert a * one == a
        assert a + zero == a
        assert a - a == zero


@pytest.mark.parametrize("group", GROUPS, ids=str)
def test_augmentation_is_a_ring_homomorphism(rng, make_element, group):
    assert augmentation(GroupRingElement.one(group)) == 1

    for _ in range(25):
        a, b = make_element(rng, group=group), make_element(rng, group=group)

        assert augmentation(a + b) == augmentation(a) + augmentation(b)
        assert augmentation(a * b) == augmentation(a) * augmentation(b)


@pytest.mark.parametrize("keep", [(), (0,), (1, 2), (0, 1), (0, 1, 2)])
def test_project_is_a_ring_homomorphism(rng, make_element, keep):
    target = TRIPLE.subgroup(keep)

    assert project(GroupRingElement.one(TRIPLE), keep) == (
        GroupRingElement.one(target)
    )

    for _ in range(25):
        a, b = make_element(rng, group=TRIPLE), make_element(rng, group=TRIPLE)

        assert project(a + b, keep) == project(a, keep) + project(b, keep)
        assert project(a * b, keep) == project(a, keep) * project(b, keep)
        assert augmentation(project(a, keep)) == augmentation(a)


@pytest.mark.parametrize("group", GROUPS, ids=str)
def test_serialization_reads_back(rng, make_element, group):
    for _ in range(25):
        a = make_element(rng, group=group, terms=4)
        text = serialize_element(a)

        assert parse_element(text, group) == a
        assert serialize_element(parse_element(text, group)) == text

    assert parse_element("0", group) == GroupRingElement.zero(group)
