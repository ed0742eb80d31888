import pytest

from orbispec import error
from orbispec.algebra.ring import (
    CYCLIC,
    SPECTRUM,
    GroupRingElement,
    parse_element,
)
from orbispec.algebra.series import (
    TruncatedSeries,
    parse_series,
    serialize_series,
    series_inverse,
    series_mul,
)


def element(text: str) -> GroupRingElement:
    return parse_element(text, CYCLIC)


def test_constant_term_must_be_the_unit():
    with pytest.raises(error.SeriesError):
        TruncatedSeries(CYCLIC, 2, [element("2{0}")])

    with pytest.raises(error.SeriesError):
        TruncatedSeries(CYCLIC, -1)

    with pytest.raises(error.SignatureError):
        TruncatedSeries(CYCLIC, 1, [GroupRingElement.one(SPECTRUM)])


def test_padding_and_truncation():
    series = TruncatedSeries(CYCLIC, 3, [element("{0}"), element("{1/2}")])

    assert series.order == 3
    assert len(series.coefficients) == 4
    assert not series[3]
    assert series.truncate(1) == TruncatedSeries(
        CYCLIC, 1, [element("{0}"), element("{1/2}")]
    )

    with pytest.raises(IndexError):
        series[4]


def test_multiplication_and_inverse():
    one_minus_t = parse_series("1 - T", CYCLIC, 5)
    geometric = series_inverse(one_minus_t)

    assert geometric == parse_series("1 + T + T^2 + T^3 + T^4 + T^5", CYCLIC, 5)
    assert series_mul(one_minus_t, geometric) == TruncatedSeries.one(CYCLIC, 5)


def test_inverse_of_a_twisted_series():
    a = parse_series("1 + {1/3}T - {1/2}T^2", CYCLIC, 4)

    assert a * a.inverse() == TruncatedSeries.one(CYCLIC, 4)
    assert a.inverse() * a == TruncatedSeries.one(CYCLIC, 4)


def test_mismatched_series():
    with pytest.raises(error.SeriesError):
        TruncatedSeries.one(CYCLIC, 2) * TruncatedSeries.one(CYCLIC, 3)

    with pytest.raises(error.SignatureError):
        TruncatedSeries.one(CYCLIC, 2) * TruncatedSeries.one(SPECTRUM, 2)


def test_substitute():
    a = parse_series("1 + {1/2}T + {1/3}T^2", CYCLIC, 2)

    assert a.substitute(2) == parse_series(
        "1 + {1/2}T^2 + {1/3}T^4", CYCLIC, 4
    )
    assert a.substitute(3, 4) == parse_series("1 + {1/2}T^3", CYCLIC, 4)


def test_map():
    a = parse_series("1 + {1/3}T", CYCLIC, 2)

    assert a.map(lambda x: x.twist(3)) == parse_series("1 + T", CYCLIC, 2)


def test_serialize_series():
    a = parse_series("1 + {1/2}T + 2{0}T^3", CYCLIC, 3)

    assert serialize_series(a) == "1 + (1*(1/2))T^1 + (2*(0))T^3"
    assert str(TruncatedSeries.one(CYCLIC, 4)) == "1"


@pytest.mark.parametrize(
    "text,coefficients",
    [
        ("1 - T", ["1", "-1"]),
        ("1 + {1/2}T + 2{0}T^2", ["1", "{1/2}", "2{0}"]),
        ("1 + (2{0} - {1/2})T^2", ["1", "0", "2{0} - {1/2}"]),
        ("1 + (1*(1/2))T^1 + (1*(0))T^2", ["1", "{1/2}", "{0}"]),
        ("1 + T + T^9", ["1", "1", "0"]),
        ("{1/2}T + 1", ["1", "{1/2}", "0"]),
    ],
)
def test_parse_series(text, coefficients):
    expected = TruncatedSeries(
        CYCLIC, 2, [element(coefficient) for coefficient in coefficients]
    )

    assert parse_series(text, CYCLIC, 2) == expected


@pytest.mark.parametrize("text", ["T", "2 + T", "", "1 + {1/2T"])
def test_parse_series_rejects(text):
    with pytest.raises((error.SeriesError, error.ElementSyntaxError)):
        parse_series(text, CYCLIC, 2)
