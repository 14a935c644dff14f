from fractions import Fraction

import pytest

from algebra.parser import parse_field_element, parse_poly
from algebra.poly import Poly
from errors import ParseError


def test_division_by_rational_constant(rational):
    assert parse_poly("X/2", rational) == Poly.var(rational, 'X').scale(Fraction(1, 2))


def test_unary_minus_and_powers(rational):
    assert parse_poly("-(X - 1)^2", rational) == parse_poly("-X^2 + 2*X - 1", rational)


def test_field_element_over_gaussian(phi4):
    a = parse_field_element("3/2*t", phi4)
    assert a == phi4.generator() * Fraction(3, 2)
    assert parse_field_element("t^2", phi4) == -1


def test_field_element_rejects_variables(phi4):
    with pytest.raises(ParseError) as excinfo:
        parse_field_element("t*X", phi4)
    assert (excinfo.value.line, excinfo.value.column) == (1, 3)


def test_exponent_limit(rational):
    with pytest.raises(ParseError) as excinfo:
        parse_poly("X^100000000", rational)
    assert excinfo.value.column == 3
    assert parse_poly("X^2", rational, max_exponent=2) == Poly.var(rational, 'X') ** 2
    with pytest.raises(ParseError):
        parse_poly("X^3", rational, max_exponent=2)


@pytest.mark.parametrize("text", [
    "X / Y",
    "X / 0",
    "X^Y",
    "(X + 1",
    "",
    "X +",
    "2X",
])
def test_syntax_errors(rational, text):
    with pytest.raises(ParseError):
        parse_poly(text, rational)


def test_error_position(rational):
    with pytest.raises(ParseError) as excinfo:
        parse_poly("X + * Y", rational)
    assert (excinfo.value.line, excinfo.value.column) == (1, 5)


def test_error_position_on_second_line(rational):
    with pytest.raises(ParseError) as excinfo:
        parse_poly("X +\n  $", rational)
    assert (excinfo.value.line, excinfo.value.column) == (2, 3)


def test_unknown_lowercase_variable(rational):
    with pytest.raises(ParseError) as excinfo:
        parse_poly("2x", rational)
    assert excinfo.value.column == 2
