import pytest

from errors import NotApplicable, WrongVariables, ZeroElement, ZeroPolynomial
from filtration.fadic import fadic_expand
from filtration.weights import TElement, WeightAssignment, basis_terms, embed_in_T, leading_form, weight
from surface.sampling import random_element, random_kx


@pytest.mark.parametrize("text, digits", [
    ("X^3", {'h0': 'X', 'h1': 'X'}),
    ("X", {'h0': 'X'}),
    ("(X^2 - 1)^2", {'h2': '1'}),
    ("X^4 + 1", {'h0': '2', 'h1': '2', 'h2': '1'}),
])
def test_fadic_examples(sigma0, text, digits):
    p = sigma0.poly(text)
    expansion = fadic_expand(sigma0, p)
    assert expansion.describe() == digits
    assert expansion.reconstruct(sigma0.f) == p


def test_fadic_errors(sigma0):
    with pytest.raises(ZeroPolynomial):
        fadic_expand(sigma0, sigma0.poly("0"))
    with pytest.raises(WrongVariables):
        fadic_expand(sigma0, sigma0.poly("X*Z"))


def test_fadic_digits_are_small(sigma1, rng):
    for _ in range(10):
        p = random_kx(sigma1.modulus, rng, max_degree=60, nonzero=True)
        expansion = fadic_expand(sigma1, p)
        assert expansion.reconstruct(sigma1.f) == p
        assert all(digit.degree('X') < sigma1.r for digit in expansion.digits.values())


def test_embedding(sigma0, sigma1):
    y = embed_in_T(sigma0.y)
    assert (y.num, y.denom_exp) == (sigma0.poly("Z^2"), 1)
    assert str(y) == "(Z^2)/f"
    assert embed_in_T(sigma0.parse("X*Z")) == TElement(sigma0, sigma0.poly("X*Z"))
    assert embed_in_T(sigma1.y) == TElement(sigma1, sigma1.phi, 1)


def test_reduction_strips_f(sigma0):
    assert TElement(sigma0, sigma0.poly("(X^2 - 1)*Z"), 1) == TElement(sigma0, sigma0.poly("Z"))
    assert str(TElement(sigma0, sigma0.poly("1"), 2)) == "(1)/f^2"


@pytest.mark.parametrize("text, mu, nu, expected", [
    ("X^3", 1, 5, 3),
    ("Y", 1, 5, 8),
    ("X + X^3", 2, 1, 6),
    ("Z", 3, 4, 4),
])
def test_weights(sigma0, text, mu, nu, expected):
    assert weight(embed_in_T(sigma0.parse(text)), WeightAssignment(mu, nu)) == expected


def test_weight_of_inverse_f(sigma0):
    inverse_f = TElement(sigma0, sigma0.poly("1"), 1)
    assert weight(inverse_f, WeightAssignment(1, 5)) == -2
    [term] = basis_terms(inverse_f, WeightAssignment(1, 5))
    assert (term.i, term.j, term.k, term.index) == (0, 1, 0, -2)


@pytest.mark.parametrize("surface_name, text, mu, nu, expected", [
    ("sigma0", "Y", 1, 100, "(Z^2)/f"),
    ("sigma1", "Y", 1, 100, "(Z^3)/f"),
    ("sigma0", "X + X^3", 1, 1, "X^3"),
])
def test_leading_forms(request, surface_name, text, mu, nu, expected):
    s = request.getfixturevalue(surface_name)
    assert str(leading_form(embed_in_T(s.parse(text)), WeightAssignment(mu, nu))) == expected


def test_zero_has_no_weight(sigma0):
    with pytest.raises(ZeroElement):
        weight(embed_in_T(sigma0.zero()), WeightAssignment(1, 1))
    with pytest.raises(ZeroElement):
        leading_form(embed_in_T(sigma0.zero()), WeightAssignment(1, 1))


def test_weight_assignment_requires_positive_mu():
    with pytest.raises(NotApplicable):
        WeightAssignment(0, 1)


def test_multiplicativity(sigma0, sigma1, rng):
    assignments = [WeightAssignment(1, 1), WeightAssignment(2, 7), WeightAssignment(1, 101)]
    for s in (sigma0, sigma1):
        for _ in range(10):
            a = random_element(s, rng, max_terms=3, nonzero=True)
            b = random_element(s, rng, max_terms=3, nonzero=True)
            ea, eb, eab = embed_in_T(a), embed_in_T(b), embed_in_T(a * b)
            assert eab == ea * eb
            for w in assignments:
                assert weight(eab, w) == weight(ea, w) + weight(eb, w)
                assert leading_form(eab, w) == leading_form(leading_form(ea, w) * leading_form(eb, w), w)
