"""
坐标环 B = K[X,Y,Z]/(f(X)Y - φ(X,Z))

B 中每个剩余类有唯一的代表元 g，满足 deg_Z(g) < d：
对关于 Z 首一的关系 φ - fY 做带余除法即得，因此相等性就是代表元的相等。
"""

from typing import Dict, Optional, Tuple

from algebra.field import FieldElement, FieldModulus, Scalar
from algebra.parser import parse_poly
from algebra.poly import Poly, divide_exact, divmod_monic, partial_derivative
from errors import DegreeTooSmall, DivisionByZero, NotDivisible, NotMonic, SurfaceMismatch, WrongVariables


class SurfaceSpec:
    """曲面参数 (f, φ)，构造后不可变"""

    def __init__(self, modulus: FieldModulus, f: Poly, phi: Poly):
        if f.modulus != modulus or phi.modulus != modulus:
            raise ValueError("f 与 φ 必须定义在同一个基域上")
        if not f.only_uses('X'):
            raise WrongVariables(f"f 只能含有 X: {f}")
        if phi.uses('Y'):
            raise WrongVariables(f"φ 不能含有 Y: {phi}")
        if f.degree('X') <= 1:
            raise DegreeTooSmall(f"需要 deg_X f = r > 1，实际 f = {f}")
        if phi.degree('Z') <= 1:
            raise DegreeTooSmall(f"需要 deg_Z φ = d > 1，实际 φ = {phi}")
        if not f.is_monic_in('X'):
            raise NotMonic(f"f 关于 X 必须首一: {f}")
        if not phi.is_monic_in('Z'):
            raise NotMonic(f"φ 关于 Z 必须首一: {phi}")

        self.modulus = modulus
        self.f = f
        self.phi = phi
        self.r = f.degree('X')
        self.d = phi.degree('Z')
        self.phi_z = partial_derivative(phi, 'Z')
        self.phi_x = partial_derivative(phi, 'X')
        self.f_prime = partial_derivative(f, 'X')
        self._Y = Poly.var(modulus, 'Y')
        # F = f(X)Y - φ(X,Z)
        self.relation = f * self._Y - phi
        # φ - f(X)Y，关于 Z 首一，用作约化的除数
        self.monic_relation = -self.relation

    @property
    def phi_in_z_only(self) -> bool:
        return not self.phi.uses('X')

    def poly(self, text: str) -> Poly:
        return parse_poly(text, self.modulus)

    def element(self, poly: Poly) -> "BElement":
        return normalize(self, poly)

    def parse(self, text: str) -> "BElement":
        return normalize(self, self.poly(text))

    def constant(self, value: Scalar) -> "BElement":
        return BElement(self, Poly.constant(self.modulus, value))

    def from_kx(self, poly: Poly) -> "BElement":
        if not poly.only_uses('X'):
            raise WrongVariables(f"期望 K[X] 中的多项式: {poly}")
        return BElement(self, poly)

    def zero(self) -> "BElement":
        return BElement(self, Poly.zero(self.modulus))

    def one(self) -> "BElement":
        return self.constant(1)

    @property
    def x(self) -> "BElement":
        return BElement(self, Poly.var(self.modulus, 'X'))

    @property
    def y(self) -> "BElement":
        return BElement(self, self._Y)

    @property
    def z(self) -> "BElement":
        return BElement(self, Poly.var(self.modulus, 'Z'))

    def describe(self) -> Dict[str, str]:
        return {
            'modulus': str(self.modulus),
            'f': str(self.f),
            'phi': str(self.phi),
            'r': self.r,
            'd': self.d,
        }

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, SurfaceSpec) and self.modulus == other.modulus
                and self.f == other.f and self.phi == other.phi)

    def __hash__(self) -> int:
        return hash((self.modulus, self.f, self.phi))

    def __repr__(self) -> str:
        return f"SurfaceSpec(m={self.modulus}, f={self.f}, phi={self.phi})"


class BElement:
    """B 中的剩余类，以 deg_Z < d 的规范代表元存储"""

    __slots__ = ('surface', 'rep')

    def __init__(self, surface: SurfaceSpec, rep: Poly):
        # rep 必须已经是规范形式；外部请使用 normalize
        self.surface = surface
        self.rep = rep

    def _check(self, other) -> "BElement":
        if isinstance(other, BElement):
            if other.surface != self.surface:
                raise SurfaceMismatch(f"元素属于不同的曲面: {self.surface} 与 {other.surface}")
            return other
        return self.surface.constant(other)

    def __add__(self, other) -> "BElement":
        other = self._check(other)
        return BElement(self.surface, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other) -> "BElement":
        other = self._check(other)
        return BElement(self.surface, self.rep - other.rep)

    def __rsub__(self, other) -> "BElement":
        return self._check(other) - self

    def __neg__(self) -> "BElement":
        return BElement(self.surface, -self.rep)

    def __mul__(self, other) -> "BElement":
        other = self._check(other)
        return normalize(self.surface, self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BElement":
        if exponent < 0:
            raise ValueError("B 中的元素不支持负整数次幂")
        result = self.surface.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "BElement":
        return BElement(self.surface, self.rep.scale(c))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def in_kx(self) -> Optional[Poly]:
        return in_kx(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, BElement):
            return self.surface == other.surface and self.rep == other.rep
        if isinstance(other, (int, FieldElement)):
            return self.rep == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rep)

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"BElement({self.rep})"


def make_surface(modulus: FieldModulus, f: Poly, phi: Poly) -> SurfaceSpec:
    """
    校验并构造曲面

    Raises:
        WrongVariables: f 含有 Y 或 Z，或 φ 含有 Y
        DegreeTooSmall: r ≤ 1 或 d ≤ 1
        NotMonic: f 关于 X 或 φ 关于 Z 不首一
    """
    return SurfaceSpec(modulus, f, phi)


def normalize(s: SurfaceSpec, p: Poly) -> BElement:
    """对关系 φ - fY 关于 Z 做带余除法，返回 deg_Z < d 的唯一代表元"""
    if p.degree('Z') < s.d:
        return BElement(s, p)
    _, remainder = divmod_monic(p, s.monic_relation, 'Z')
    return BElement(s, remainder)


def b_arith(a: BElement, b: BElement, op: str) -> BElement:
    """B 中的运算 add / sub / mul"""
    if a.surface != b.surface:
        raise SurfaceMismatch(f"元素属于不同的曲面: {a.surface} 与 {b.surface}")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f"未知的运算: {op}")


def in_kx(b: BElement) -> Optional[Poly]:
    """代表元只含 X 时返回它，否则返回 None"""
    if b.rep.only_uses('X'):
        return b.rep
    return None


def _kx_coefficients(b: BElement) -> Dict[Tuple[int, int], Poly]:
    """把代表元拆成基 y^j z^k 上的 K[X] 系数"""
    modulus = b.surface.modulus
    groups: Dict[Tuple[int, int], dict] = {}
    for (ex, ey, ez), coeff in b.rep.terms.items():
        groups.setdefault((ey, ez), {})[(ex, 0, 0)] = coeff
    return {key: Poly(modulus, terms) for key, terms in groups.items()}


def quotient_by_kx(b: BElement, h: Poly) -> BElement:
    """
    在 B 中计算 b / h(x)

    B 是以 y^j z^k (k < d) 为基的自由 K[x]-模，逐个系数做精确除法即可。

    Raises:
        DivisionByZero: h 为零
        NotDivisible: b 不属于 h·B
    """
    if not h.only_uses('X'):
        raise WrongVariables(f"期望 K[X] 中的多项式: {h}")
    if h.is_zero():
        raise DivisionByZero("不能除以零多项式")
    modulus = b.surface.modulus
    quotient = Poly.zero(modulus)
    for (ey, ez), coeff in _kx_coefficients(b).items():
        quotient = quotient + divide_exact(coeff, h).shift('Y', ey).shift('Z', ez)
    return BElement(b.surface, quotient)


def divisible_by_kx(b: BElement, h: Poly) -> bool:
    """b ∈ h(x)·B 的精确判定"""
    if h.is_zero():
        return b.is_zero()
    try:
        quotient_by_kx(b, h)
    except NotDivisible:
        return False
    return True
