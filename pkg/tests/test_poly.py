import pytest
import sympy

from algebra.parser import parse_poly
from algebra.poly import (Poly, divide_exact, divmod_in_Z, divmod_monic, partial_derivative,
                          poly_arith, substitute)
from errors import DivisionByZero, NotDivisible, NotMonic, NotMonicInZ
from surface.sampling import random_poly


def P(text, modulus):
    return parse_poly(text, modulus)


def test_product(rational):
    assert P("(X + 1)*(X - 1)", rational) == P("X^2 - 1", rational)
    assert poly_arith(P("X", rational), P("Y", rational), 'mul') == P("X*Y", rational)


def test_substitute_unity_form(rational):
    h = P("X^5 + 2*X^4 + X^2 - 2", rational)
    shifted = substitute(h, {'X': P("X^4", rational)}) * P("X^2", rational)
    assert shifted == P("X^22 + 2*X^18 + X^10 - 2*X^2", rational)


def test_substitute_is_simultaneous(rational):
    p = P("X*Y + Z", rational)
    assert substitute(p, {'X': P("Y", rational), 'Y': P("X", rational)}) == p


@pytest.mark.parametrize("text, var, expected", [
    ("X^3*Y + Z^2", 'X', "3*X^2*Y"),
    ("X^3*Y + Z^2", 'Y', "X^3"),
    ("X^3*Y + Z^2", 'Z', "2*Z"),
    ("5", 'X', "0"),
])
def test_partial_derivative(rational, text, var, expected):
    assert partial_derivative(P(text, rational), var) == P(expected, rational)


def test_divide_exact(rational):
    assert divide_exact(P("X^2 - 1", rational), P("X - 1", rational)) == P("X + 1", rational)
    assert divide_exact(P("X^2*Y*Z", rational), P("X*Z", rational)) == P("X*Y", rational)


def test_divide_exact_reports_remainder(rational):
    with pytest.raises(NotDivisible) as excinfo:
        divide_exact(P("X", rational), P("X^2 - 1", rational))
    assert excinfo.value.remainder == P("X", rational)


def test_divide_by_zero(rational):
    with pytest.raises(DivisionByZero):
        divide_exact(P("X", rational), Poly.zero(rational))


@pytest.mark.parametrize("p, q, quotient, remainder", [
    ("Z^2 + X*Z", "Z^2 - X*Y", "1", "X*Z + X*Y"),
    ("Z^3", "Z^2", "Z", "0"),
    ("X^2", "Z - 1", "0", "X^2"),
])
def test_divmod_in_z(rational, p, q, quotient, remainder):
    assert divmod_in_Z(P(p, rational), P(q, rational)) == (P(quotient, rational), P(remainder, rational))


def test_divmod_requires_monic(rational):
    with pytest.raises(NotMonicInZ):
        divmod_in_Z(P("Z", rational), P("2*Z", rational))
    with pytest.raises(NotMonic) as excinfo:
        divmod_monic(P("X", rational), P("2*X", rational), 'X')
    assert not isinstance(excinfo.value, NotMonicInZ)


@pytest.mark.parametrize("text, expected", [
    ("(X^2 - 1)*Y", "(X^2 - 1)*Y"),
    ("X*Y*Z*3/2*X", "3/2*X^2*Y*Z"),
    ("-X", "-X"),
    ("X - X", "0"),
    ("Z^2 + X*Z + Y + X^2 - 1", "Z^2 + X*Z + Y + X^2 - 1"),
])
def test_canonical_text(rational, text, expected):
    assert str(P(text, rational)) == expected


def test_non_rational_coefficient_text(phi4):
    assert str(P("(t + 1)*X", phi4)) == "(t + 1)*X"


def test_leibniz_rule(phi3, rng):
    for _ in range(30):
        p, q = random_poly(phi3, rng), random_poly(phi3, rng)
        for var in 'XYZ':
            lhs = partial_derivative(p * q, var)
            rhs = partial_derivative(p, var) * q + p * partial_derivative(q, var)
            assert lhs == rhs


def test_substitution_is_homomorphism(rational, rng):
    images = {'X': P("X + Y", rational), 'Z': P("Z^2 - 1", rational)}
    for _ in range(20):
        p, q = random_poly(rational, rng), random_poly(rational, rng)
        assert substitute(p * q, images) == substitute(p, images) * substitute(q, images)
        assert substitute(p + q, images) == substitute(p, images) + substitute(q, images)


def test_text_round_trip(phi4, rng):
    for _ in range(30):
        p = random_poly(phi4, rng)
        assert P(str(p), phi4) == p


def test_divmod_reconstructs(rational, rng):
    q = P("Z^2 - X^2*Y + X", rational)
    for _ in range(30):
        p = random_poly(rational, rng)
        quotient, remainder = divmod_in_Z(p, q)
        assert quotient * q + remainder == p
        assert remainder.degree('Z') < 2


def to_sympy(p):
    X, Y, Z = sympy.symbols('X Y Z')
    total = sympy.Integer(0)
    for (ex, ey, ez), coeff in p.items():
        value = coeff.rational_value()
        total += sympy.Rational(int(value.numerator), int(value.denominator)) * X**ex * Y**ey * Z**ez
    return total


def test_arithmetic_against_sympy(rational, rng):
    for _ in range(20):
        p, q = random_poly(rational, rng), random_poly(rational, rng)
        assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
        assert sympy.expand(to_sympy(p - q) - (to_sympy(p) - to_sympy(q))) == 0
        assert sympy.expand(to_sympy(partial_derivative(p, 'Z')) - sympy.diff(to_sympy(p), 'Z')) == 0
