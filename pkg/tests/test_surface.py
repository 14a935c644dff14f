import json

import pytest

from algebra.field import FieldModulus
from algebra.parser import parse_poly
from checks.suites import SIGMA0, standard_surface
from errors import ConfigError, DegreeTooSmall, NotMonic, ParseError, SurfaceMismatch, WrongVariables
from surface.loader import load_derivation_spec, load_surface
from surface.ring import b_arith, divisible_by_kx, in_kx, make_surface, normalize, quotient_by_kx
from surface.sampling import random_element, random_poly


def test_standard_surfaces(sigma0, sigma1):
    assert (sigma0.r, sigma0.d) == (2, 2)
    assert (sigma1.r, sigma1.d) == (22, 3)
    assert sigma0.phi_in_z_only


@pytest.mark.parametrize("f, phi, error", [
    ("X", "Z^2", DegreeTooSmall),
    ("X^2 - 1", "Z", DegreeTooSmall),
    ("X^2 + Y", "Z^2", WrongVariables),
    ("X^2 - 1", "Z^2 + Y", WrongVariables),
    ("X*Z", "Z", WrongVariables),
    ("2*X^2 - 1", "Z^2", NotMonic),
    ("X^2 - 1", "2*Z^2", NotMonic),
])
def test_invalid_surfaces(rational, f, phi, error):
    with pytest.raises(error):
        make_surface(rational, parse_poly(f, rational), parse_poly(phi, rational))


@pytest.mark.parametrize("text, expected", [
    ("Z^2", "(X^2 - 1)*Y"),
    ("Z^3", "(X^2 - 1)*Y*Z"),
    ("(X^2 - 1)*Y - Z^2", "0"),
    ("Z + 1", "Z + 1"),
])
def test_normal_forms_on_sigma0(sigma0, text, expected):
    assert str(sigma0.parse(text)) == expected


def test_cube_of_z_on_sigma1(sigma1):
    product = b_arith(sigma1.z, sigma1.z * sigma1.z, 'mul')
    assert product == sigma1.parse("(X^22 + 2*X^18 + X^10 - 2*X^2)*Y - Z - 1")


def test_powers(sigma0):
    assert sigma0.z ** 0 == sigma0.one()
    assert sigma0.z ** 3 == sigma0.parse("(X^2 - 1)*Y*Z")
    with pytest.raises(ValueError):
        sigma0.z ** -1


def test_mixed_surfaces_rejected(sigma0, sigma1):
    with pytest.raises(SurfaceMismatch):
        b_arith(sigma0.x, sigma1.x, 'add')
    with pytest.raises(SurfaceMismatch):
        sigma0.x * sigma1.x


def test_in_kx(sigma0):
    assert in_kx(sigma0.parse("X^3 + 1")) == sigma0.poly("X^3 + 1")
    assert in_kx(sigma0.parse("X*Y")) is None
    assert sigma0.parse("Z^2 - (X^2 - 1)*Y + X").in_kx() == sigma0.poly("X")


def test_divisibility_by_kx(sigma0):
    f = sigma0.f
    b = sigma0.parse("(X^2 - 1)*X*Y + (X^3 - X)*Z")
    assert divisible_by_kx(b, f)
    assert quotient_by_kx(b, f) == sigma0.parse("X*Y + X*Z")
    assert not divisible_by_kx(sigma0.z, f)
    assert divisible_by_kx(sigma0.zero(), sigma0.poly("0"))
    assert not divisible_by_kx(sigma0.z, sigma0.poly("0"))


def test_normal_form_properties(sigma0, sigma1, rng):
    for s in (sigma0, sigma1):
        for _ in range(100):
            p, q = random_poly(s.modulus, rng, degrees=(4, 2, 5)), random_poly(s.modulus, rng, degrees=(4, 2, 5))
            np = normalize(s, p)
            assert np.rep.degree('Z') < s.d
            assert normalize(s, np.rep) == np
            assert normalize(s, p + s.relation * q) == np
            assert normalize(s, p * q) == np * normalize(s, q)


def test_ring_axioms(phi3, rng):
    s = standard_surface(SIGMA0, modulus="t^2 + t + 1")
    assert s.modulus == phi3
    for _ in range(30):
        a, b, c = (random_element(s, rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_load_surface(tmp_path):
    path = tmp_path / 'surface.json'
    path.write_text(json.dumps({'modulus': 't^2 + 1', 'f': 'X^3 - X', 'phi': 'Z^2 + t'}), encoding='utf-8')
    s = load_surface(str(path))
    assert s.modulus == FieldModulus.cyclotomic(4)
    assert (s.r, s.d) == (3, 2)
    assert load_surface(str(path), modulus_override='t').modulus == FieldModulus.rational()


def test_load_surface_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_surface(str(tmp_path / 'missing.json'))

    broken = tmp_path / 'broken.json'
    broken.write_text('{"f": "X^2",\n  oops}', encoding='utf-8')
    with pytest.raises(ParseError) as excinfo:
        load_surface(str(broken))
    assert excinfo.value.line == 2

    incomplete = tmp_path / 'incomplete.json'
    incomplete.write_text(json.dumps({'f': 'X^2 - 1'}), encoding='utf-8')
    with pytest.raises(ParseError):
        load_surface(str(incomplete))


def test_load_derivation_spec(tmp_path):
    path = tmp_path / 'derivation.json'
    path.write_text(json.dumps({'dx': '0', 'dy': '2*Z', 'dz': 'X^2 - 1'}), encoding='utf-8')
    assert load_derivation_spec(str(path)) == {'dx': '0', 'dy': '2*Z', 'dz': 'X^2 - 1'}
