"""
带种子的随机多项式、元素与曲面，供性质检验和不变量报告抽样使用
"""

import random
from typing import Optional, Sequence

from algebra.field import FieldElement, FieldModulus
from algebra.poly import Poly
from surface.ring import BElement, SurfaceSpec, normalize

COEFF_RANGE = (-3, 3)


def random_scalar(modulus: FieldModulus, rng: random.Random, coeff_range=COEFF_RANGE) -> FieldElement:
    """系数向量逐分量随机的域元素"""
    low, high = coeff_range
    value = modulus.zero()
    power = modulus.one()
    generator = modulus.generator()
    for _ in range(modulus.degree):
        value = value + power * rng.randint(low, high)
        power = power * generator
    return value


def random_kx(modulus: FieldModulus, rng: random.Random, max_degree: int = 5,
              coeff_range=COEFF_RANGE, nonzero: bool = False) -> Poly:
    """K[X] 中次数不超过 max_degree 的随机多项式"""
    while True:
        coeffs = {e: random_scalar(modulus, rng, coeff_range) for e in range(max_degree + 1)}
        poly = Poly.univariate(modulus, coeffs)
        if not nonzero or not poly.is_zero():
            return poly


def random_monic(modulus: FieldModulus, rng: random.Random, degree: int, var: str = 'X',
                 coeff_range=COEFF_RANGE) -> Poly:
    coeffs = {e: rng.randint(*coeff_range) for e in range(degree)}
    coeffs[degree] = 1
    return Poly.univariate(modulus, coeffs, var)


def random_poly(modulus: FieldModulus, rng: random.Random, max_terms: int = 5,
                degrees: Sequence[int] = (4, 2, 4), coeff_range=COEFF_RANGE) -> Poly:
    """K[X,Y,Z] 中的随机稀疏多项式，degrees 为各变量的次数上界"""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        monomial = tuple(rng.randint(0, bound) for bound in degrees)
        terms[monomial] = random_scalar(modulus, rng, coeff_range)
    return Poly(modulus, terms)


def random_element(surface: SurfaceSpec, rng: random.Random, max_terms: int = 5,
                   nonzero: bool = False, kx_bias: float = 0.25) -> BElement:
    """
    B 中的随机元素

    Args:
        surface: 曲面
        rng: 随机数发生器
        max_terms: 项数上界
        nonzero: 是否要求非零
        kx_bias: 生成 K[x] 元素的概率，使核检验两侧都有样本
    """
    while True:
        if rng.random() < kx_bias:
            poly = random_kx(surface.modulus, rng, max_degree=4)
        else:
            poly = random_poly(surface.modulus, rng, max_terms, degrees=(4, 2, surface.d + 1))
        element = normalize(surface, poly)
        if not nonzero or not element.is_zero():
            return element


def random_surface(rng: random.Random, modulus: Optional[FieldModulus] = None,
                   r_range=(2, 6), d_range=(2, 6), coeff_range=COEFF_RANGE) -> SurfaceSpec:
    """系数取自 coeff_range 的随机曲面，φ 的低次系数可依赖 X"""
    modulus = modulus or FieldModulus.rational()
    r = rng.randint(*r_range)
    d = rng.randint(*d_range)
    f = random_monic(modulus, rng, r, 'X', coeff_range)
    phi = Poly.monomial(modulus, (0, 0, d))
    for k in range(d):
        coeff = random_kx(modulus, rng, max_degree=2, coeff_range=coeff_range)
        phi = phi + coeff.shift('Z', k)
    return SurfaceSpec(modulus, f, phi)
