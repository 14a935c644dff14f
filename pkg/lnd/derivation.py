"""
B 上的 K-导子

导子由 x, y, z 的像决定；要在 B 上良定义，
关系 F = f(X)Y - φ(X,Z) 在 Leibniz 延拓下的像必须为零：
    f'(x)·dx·y + f(x)·dy - φ_X(x,z)·dx - φ_Z(x,z)·dz = 0
"""

import logging
from typing import Dict, Optional

from algebra.poly import Poly, partial_derivative
from errors import RelationViolated, SurfaceMismatch
from surface.ring import BElement, SurfaceSpec

logger = logging.getLogger(__name__)

DEFAULT_NILPOTENCY_CAP = 64


class Derivation:
    """已校验的导子，保存 x, y, z 的像"""

    __slots__ = ('surface', 'dx', 'dy', 'dz')

    def __init__(self, surface: SurfaceSpec, dx: BElement, dy: BElement, dz: BElement):
        self.surface = surface
        self.dx = dx
        self.dy = dy
        self.dz = dz

    @property
    def images(self) -> Dict[str, BElement]:
        return {'x': self.dx, 'y': self.dy, 'z': self.dz}

    def is_zero(self) -> bool:
        return self.dx.is_zero() and self.dy.is_zero() and self.dz.is_zero()

    def scaled(self, h: Poly) -> "Derivation":
        """h(x)·D"""
        factor = self.surface.from_kx(h)
        return Derivation(self.surface, factor * self.dx, factor * self.dy, factor * self.dz)

    def describe(self) -> Dict[str, str]:
        return {'dx': str(self.dx), 'dy': str(self.dy), 'dz': str(self.dz)}

    def __call__(self, b: BElement) -> BElement:
        return apply(self, b)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Derivation) and self.surface == other.surface
                and self.dx == other.dx and self.dy == other.dy and self.dz == other.dz)

    def __hash__(self) -> int:
        return hash((self.dx, self.dy, self.dz))

    def __repr__(self) -> str:
        return f"Derivation(dx={self.dx}, dy={self.dy}, dz={self.dz})"


def relation_residue(s: SurfaceSpec, dx: BElement, dy: BElement, dz: BElement) -> BElement:
    """关系 F 在候选导子下的像（规范形）"""
    f_prime = s.from_kx(s.f_prime)
    f = s.from_kx(s.f)
    phi_x = s.element(s.phi_x)
    phi_z = s.element(s.phi_z)
    return f_prime * dx * s.y + f * dy - phi_x * dx - phi_z * dz


def make_derivation(s: SurfaceSpec, dx: BElement, dy: BElement, dz: BElement) -> Derivation:
    """
    校验并构造导子

    Raises:
        SurfaceMismatch: 像不属于该曲面
        RelationViolated: 关系像非零，residue 为见证
    """
    for image in (dx, dy, dz):
        if image.surface != s:
            raise SurfaceMismatch(f"导子的像不属于曲面 {s}")
    residue = relation_residue(s, dx, dy, dz)
    if not residue.is_zero():
        raise RelationViolated(f"导子在 B 上不良定义，关系的像为 {residue}", residue=residue)
    return Derivation(s, dx, dy, dz)


def canonical_D(s: SurfaceSpec) -> Derivation:
    """𝒟(x) = 0, 𝒟(y) = φ_Z(x,z), 𝒟(z) = f(x)"""
    return make_derivation(s, s.zero(), s.element(s.phi_z), s.from_kx(s.f))


def apply(D: Derivation, b: BElement) -> BElement:
    """按 Leibniz 法则在规范代表元上计算 D(b)"""
    if b.surface != D.surface:
        raise SurfaceMismatch(f"元素不属于导子所在的曲面 {D.surface}")
    s = D.surface
    result = s.zero()
    for var, image in (('X', D.dx), ('Y', D.dy), ('Z', D.dz)):
        if image.is_zero() or not b.rep.uses(var):
            continue
        # 偏导不会升高 Z 次数，仍是规范形
        result = result + BElement(s, partial_derivative(b.rep, var)) * image
    return result


def power_apply(D: Derivation, b: BElement, n: int) -> BElement:
    """D^n(b)"""
    for _ in range(n):
        if b.is_zero():
            break
        b = apply(D, b)
    return b


def nilpotency_index(D: Derivation, b: BElement, cap: int = DEFAULT_NILPOTENCY_CAP) -> Optional[int]:
    """
    最小的 n 使 D^n(b) = 0

    Args:
        D: 导子
        b: 元素
        cap: 迭代上限

    Returns:
        幂零指数；b = 0 时为 0；cap 次内未达到零时返回 None（不代表非幂零）
    """
    if cap < 1:
        raise ValueError(f"迭代上限必须 ≥ 1: {cap}")
    if b.is_zero():
        return 0
    current = b
    for n in range(1, cap + 1):
        current = apply(D, current)
        if current.is_zero():
            return n
    logger.debug(f"幂零指数超过上限 {cap}: {b}")
    return None
