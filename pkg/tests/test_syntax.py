import pytest
from hypothesis import given

from conftest import monomial_ideals
from srfrob.errors import ParseError
from srfrob.monomial import MonomialIdeal
from srfrob.syntax import format_ideal, format_monomial, parse_ideal, parse_monomial


def test_parse_basic():
    I = parse_ideal("x1*x2, x1*x3")
    assert I.n == 3
    assert I.gens == ((1, 1, 0), (1, 0, 1))


def test_whitespace_is_insignificant():
    assert parse_ideal(" x1 * x2 ,x1*x3 ") == parse_ideal("x1*x2,x1*x3")


def test_explicit_n_pads():
    assert parse_ideal("x1", 4).n == 4


def test_exponents_and_repeats():
    assert parse_monomial("x2^3*x1", 2) == (1, 3)
    assert parse_monomial("x1*x1", 1) == (2,)


@pytest.mark.parametrize("bad", ["", "x1,,x2", "y1", "x0", "x1^", "x1**x2", "x1^-2", "1"])
def test_malformed(bad):
    with pytest.raises(ParseError):
        parse_ideal(bad)


def test_index_above_n():
    with pytest.raises(ParseError):
        parse_ideal("x5", 3)


def test_format():
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_ideal(MonomialIdeal.zero(2)) == "0"


@given(monomial_ideals(max_n=4))
def test_roundtrip(I):
    if I.is_unit():
        return
    assert parse_ideal(format_ideal(I), I.n) == I
