"""
单位根分解 g(X) = X^i·h(X^s) 与曲面的中心化
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from algebra.field import FieldElement
from algebra.poly import Poly, substitute
from errors import NotApplicable, NotCentered, NotMonic, PhiDependsOnX, WrongVariables
from surface.ring import BElement, SurfaceSpec, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnityDecomposition:
    """g = X^i·h(X^s)，s 取最大"""
    i: int
    s: int
    h: Poly

    def reconstruct(self, var: str = 'X') -> Poly:
        coeffs = self.h.univariate_coeffs('X')
        return Poly.univariate(self.h.modulus, {self.i + e * self.s: c for e, c in coeffs.items()}, var)

    def describe(self) -> dict:
        return {'i': self.i, 's': self.s, 'h': str(self.h)}


def unity_decompose(g: Poly, var: str = 'X', require_nonzero_root: bool = True) -> UnityDecomposition:
    """
    把首一多项式写成 X^i·h(X^s)

    i 为最小的非零项指数，s 为各指数与 i 之差的最大公约数，h 为压缩后的多项式（总以 X 为变量）。

    Args:
        g: 关于 var 的单变量多项式
        var: g 的变量
        require_nonzero_root: 为 False 时单项式 var^n 映射为 (0, n, X)

    Raises:
        WrongVariables: g 含有 var 以外的变量
        NotMonic: g 不首一
        NotApplicable: deg g < 2，或 g = X^deg 且要求非零根
        NotCentered: X^(deg-1) 的系数非零
    """
    if not g.only_uses([var]):
        raise WrongVariables(f"期望关于 {var} 的单变量多项式: {g}")
    if g.is_zero() or not g.is_monic_in(var):
        raise NotMonic(f"{g} 不是首一多项式")
    degree = g.degree(var)
    if degree < 2:
        raise NotApplicable(f"次数必须 ≥ 2: {g}")
    coeffs = g.univariate_coeffs(var)
    modulus = g.modulus
    if len(coeffs) == 1:
        if require_nonzero_root:
            raise NotApplicable(f"{g} 没有非零根")
        return UnityDecomposition(0, degree, Poly.var(modulus, 'X'))
    if (degree - 1) in coeffs:
        raise NotCentered(f"{g} 的 {var}^{degree - 1} 系数非零，请先中心化")
    i = min(coeffs)
    s = 0
    for exponent in coeffs:
        s = gcd(s, exponent - i)
    h = Poly.univariate(modulus, {(e - i) // s: c for e, c in coeffs.items()})
    return UnityDecomposition(i, s, h)


def center(s: SurfaceSpec) -> Tuple[SurfaceSpec, Tuple[FieldElement, FieldElement]]:
    """
    消去 f 的 X^(r-1) 系数与 φ 的 Z^(d-1) 系数

    Returns:
        (中心化后的曲面, (a, b))，其中 Z → Z - a，X → X - b

    Raises:
        PhiDependsOnX: φ 含有 X
    """
    if not s.phi_in_z_only:
        raise PhiDependsOnX(f"φ 必须属于 K[Z]: {s.phi}")
    modulus = s.modulus
    b = s.f.coefficient((s.r - 1, 0, 0)) / s.r
    a = s.phi.coefficient((0, 0, s.d - 1)) / s.d
    X = Poly.var(modulus, 'X')
    Z = Poly.var(modulus, 'Z')
    f = substitute(s.f, {'X': X - Poly.constant(modulus, b)})
    phi = substitute(s.phi, {'Z': Z - Poly.constant(modulus, a)})
    centered = SurfaceSpec(modulus, f, phi)
    logger.info(f"中心化: f={f}, φ={phi}, a={a}, b={b}")
    return centered, (a, b)


def transport_to_centered(element: BElement, centered: SurfaceSpec,
                          shift: Tuple[FieldElement, FieldElement]) -> BElement:
    """同构 B → B̃：x ↦ x̃ - b, y ↦ ỹ, z ↦ z̃ - a"""
    a, b = shift
    modulus = centered.modulus
    images = {
        'X': Poly.var(modulus, 'X') - Poly.constant(modulus, b),
        'Z': Poly.var(modulus, 'Z') - Poly.constant(modulus, a),
    }
    return normalize(centered, substitute(element.rep, images))
