import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieulrich import DynkinType, format_weight, parse_variety, parse_weight
from lieulrich.parsing import ParseError, parse_weight_vec


@pytest.mark.parametrize(
    "text,expected",
    [("E7/P1", ("E", 7, 1)), ("A1/P1", ("A", 1, 1)), ("F4/P4", ("F", 4, 4)), (" a3 / p2 ", ("A", 3, 2))],
)
def test_parse_variety(text, expected):
    v = parse_variety(text)
    assert (v.type.series, v.type.rank, v.k) == expected
    assert str(v) == f"{expected[0]}{expected[1]}/P{expected[2]}"


@pytest.mark.parametrize(
    "text,message",
    [
        ("E7/P9", "node index 9 exceeds rank 7"),
        ("H3/P1", "unknown series 'H'"),
        ("E9/P1", "rank"),
        ("B1/P1", "rank"),
        ("E6/P0", "node index must be at least 1"),
        ("E6", "malformed variety"),
        ("E6/Q1", "malformed variety"),
    ],
)
def test_parse_variety_errors(text, message):
    with pytest.raises(ParseError) as exc:
        parse_variety(text)
    assert message in str(exc.value)
    assert exc.value.position is not None


def test_variety_error_messages_are_distinct():
    msgs = set()
    for text in ["H3/P1", "E9/P1", "E7/P9"]:
        with pytest.raises(ParseError) as exc:
            parse_variety(text)
        msgs.add(str(exc.value).split(" (at position")[0])
    assert len(msgs) == 3


@pytest.mark.parametrize(
    "text,rank,expected",
    [
        ("w5+3w6+8w7", 7, (0, 0, 0, 0, 1, 3, 8)),
        ("", 3, (0, 0, 0)),
        ("0", 2, (0, 0)),
        ("w2+w2", 4, (0, 2, 0, 0)),
        ("-2w1+w3", 3, (-2, 0, 1)),
        (" 3 w1 - w2 ", 2, (3, -1)),
        ("2*w1", 2, (2, 0)),
        ("w1-w1", 1, (0,)),
    ],
)
def test_parse_weight(text, rank, expected):
    assert parse_weight(text, rank) == expected


@pytest.mark.parametrize("text", ["w", "3", "w1w2", "w1+", "x1", "w1 3w2", "++w1"])
def test_parse_weight_malformed(text):
    with pytest.raises(ParseError, match="malformed"):
        parse_weight(text, 4)


def test_parse_weight_index_overflow():
    with pytest.raises(ParseError, match="out of range"):
        parse_weight("w7", 6)
    with pytest.raises(ParseError, match="out of range"):
        parse_weight("w0", 6)


def test_parse_weight_vec():
    assert parse_weight_vec("0,0,0,0,1,3", 6) == (0, 0, 0, 0, 1, 3)
    with pytest.raises(ParseError):
        parse_weight_vec("0,1", 3)
    with pytest.raises(ParseError):
        parse_weight_vec("0,a,1", 3)


def test_format_weight():
    assert format_weight((0, 0, 0, 0, 1, 3)) == "w5+3w6"
    assert format_weight((3, 0, 1, 0, 0, 0)) == "3w1+w3"
    assert format_weight((-2, 0, -1)) == "-2w1-w3"
    assert format_weight((0, 0)) == "0"


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_format_parse_round_trip(coeffs):
    w = tuple(coeffs)
    assert parse_weight(format_weight(w), len(w)) == w


def test_dynkin_type_text():
    assert str(DynkinType("E", 6)) == "E6"
