import json
import random

import pytest

from generators import rand_decomposition
from hilbertseries.catalog import FIX1_TEXT, fix1
from hilbertseries.formats import (
    ParseError,
    decomposition_from_json,
    decomposition_to_json,
    format_series,
    parse_laurent,
    parse_series,
    series_from_json,
    series_to_json,
)
from hilbertseries.series import decomposition_to_series


def test_parse_basic():
    H = parse_series("1/((1-t1)*(1-t2))", 2)
    assert H.numerator == parse_laurent("1", 2)
    assert H.factors == ((0, 1), (1, 0))


def test_parse_fix1_text():
    H = parse_series(FIX1_TEXT, 2)
    assert H.d == (3, 3)
    assert H.numerator[(1, 1)] == -6


def test_bracket_exponent_is_a_general_factor():
    H = parse_series("(1+t)/(1-t^[5])", 1)
    assert H.factors == ((5,),)


def test_whitespace_and_negative_exponents():
    a = parse_series(" t1 ^ -2 * ( 3 - t2 ) ", 2)
    b = parse_series("t1^(-2)*(3-t2)", 2)
    assert a == b


@pytest.mark.parametrize("text, offset", [("1/(1-t", 6), ("1 + * t", 4), ("t3", 0), ("1/(1+t)", 1)])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_series(text, 1)
    assert info.value.offset == offset


def test_exponent_overflow():
    with pytest.raises(ParseError):
        parse_series("t^100000000", 1)


def test_print_parse_round_trip():
    rng = random.Random(2)
    for _ in range(40):
        H = decomposition_to_series(rand_decomposition(rng, 2, (2, 2)))
        text = format_series(H)
        again = parse_series(text, 2)
        assert again == H
        assert format_series(again) == text


def test_json_round_trips():
    H = fix1()
    data = json.loads(json.dumps(series_to_json(H)))
    assert all(isinstance(t["c"], str) for t in data["num"])
    assert series_from_json(data) == H
    D = rand_decomposition(random.Random(1), 3, (1, 2, 1))
    assert decomposition_from_json(json.loads(json.dumps(decomposition_to_json(D)))) == D
