"""
自同构群的四族生成元 H, T, R, S

适用前提：φ ∈ K[Z]，f ≠ X^r，且 f 与 φ 已中心化（次高项系数为零）。
"""

from typing import Iterable

from algebra.field import FieldElement
from algebra.poly import Poly, divide_exact, substitute
from autos.morphism import GeneratorTag, Morphism, TConvention, compose, identity, make_morphism
from autos.unity import unity_decompose
from errors import (DivisionByZero, NotApplicable, NotCentered, NotRootOfUnity,
                    PhiDependsOnX, WrongVariables)
from surface.ring import SurfaceSpec, normalize


def require_generator_setting(s: SurfaceSpec) -> None:
    """
    检查生成元的适用前提

    Raises:
        PhiDependsOnX: φ 含有 X
        NotApplicable: f = X^r
        NotCentered: f 或 φ 的次高项系数非零
    """
    if not s.phi_in_z_only:
        raise PhiDependsOnX(f"φ 必须属于 K[Z]: {s.phi}")
    if len(s.f) == 1:
        raise NotApplicable(f"f = {s.f} 没有非零根，该情形不在适用范围内")
    if not s.f.coefficient((s.r - 1, 0, 0)).is_zero():
        raise NotCentered(f"f 的 X^{s.r - 1} 系数非零，请先执行 center")
    if not s.phi.coefficient((0, 0, s.d - 1)).is_zero():
        raise NotCentered(f"φ 的 Z^{s.d - 1} 系数非零，请先执行 center")


def make_H(s: SurfaceSpec, h: Poly) -> Morphism:
    """
    H(x) = x, H(z) = z + h(x)f(x), H(y) = y + [φ(z + h(x)f(x)) - φ(z)] / f(x)

    Raises:
        WrongVariables: h 不属于 K[X]
        NotDivisible: 精确除法失败（φ ∈ K[Z] 时不会发生）
    """
    require_generator_setting(s)
    if not h.only_uses('X'):
        raise WrongVariables(f"h 必须属于 K[X]: {h}")
    shift = h * s.f
    Z = Poly.var(s.modulus, 'Z')
    difference = substitute(s.phi, {'Z': Z + shift}) - s.phi
    y_shift = divide_exact(difference, s.f)
    tz = normalize(s, Z + shift)
    ty = normalize(s, Poly.var(s.modulus, 'Y') + y_shift)
    return make_morphism(s, s.x, ty, tz, (GeneratorTag('H', h),))


def make_T(s: SurfaceSpec, lambda_: FieldElement,
           convention: TConvention = TConvention.RELATION) -> Morphism:
    """
    T(x) = λx, T(z) = z, T(y) = λ^(-j)·y，其中 f = X^j·h(X^s) 且 λ^s = 1

    Raises:
        NotApplicable: f 不满足分解前提
        NotRootOfUnity: λ^s ≠ 1
        RelationViolated: PRINTED 约定下 λ^(2j) ≠ 1
    """
    require_generator_setting(s)
    decomposition = unity_decompose(s.f)
    j, period = decomposition.i, decomposition.s
    if not lambda_.is_root_of_unity(period):
        raise NotRootOfUnity(f"需要 λ^{period} = 1，实际 λ = {lambda_}")
    y_factor = lambda_ ** (-j) if convention is TConvention.RELATION else lambda_ ** j
    return make_morphism(s, s.x.scale(lambda_), s.y.scale(y_factor), s.z,
                         (GeneratorTag('T', lambda_, convention),))


def make_R(s: SurfaceSpec, lambda_: FieldElement) -> Morphism:
    """
    仅当 φ = Z^d：R(x) = x, R(z) = λz, R(y) = λ^d·y

    Raises:
        NotApplicable: φ ≠ Z^d
        DivisionByZero: λ = 0
    """
    require_generator_setting(s)
    if s.phi != Poly.monomial(s.modulus, (0, 0, s.d)):
        raise NotApplicable(f"R 只适用于 φ = Z^{s.d}，实际 φ = {s.phi}")
    if lambda_.is_zero():
        raise DivisionByZero("R 的参数 λ 不能为零")
    return make_morphism(s, s.x, s.y.scale(lambda_ ** s.d), s.z.scale(lambda_),
                         (GeneratorTag('R', lambda_),))


def make_S(s: SurfaceSpec, mu: FieldElement) -> Morphism:
    """
    φ = Z^i·ψ(Z^m)，m ≥ 2 最大：S(x) = x, S(z) = μz, S(y) = μ^i·y，μ^m = 1

    Raises:
        NotApplicable: m < 2
        NotRootOfUnity: μ^m ≠ 1
    """
    require_generator_setting(s)
    decomposition = unity_decompose(s.phi, var='Z', require_nonzero_root=False)
    i, m = decomposition.i, decomposition.s
    if m < 2:
        raise NotApplicable(f"φ = {s.phi} 不能写成 Z^i·ψ(Z^m) (m ≥ 2)")
    if not mu.is_root_of_unity(m):
        raise NotRootOfUnity(f"需要 μ^{m} = 1，实际 μ = {mu}")
    return make_morphism(s, s.x, s.y.scale(mu ** i), s.z.scale(mu),
                         (GeneratorTag('S', mu),))


def from_tag(s: SurfaceSpec, tag: GeneratorTag) -> Morphism:
    if tag.family == 'H':
        return make_H(s, tag.parameter)
    if tag.family == 'T':
        return make_T(s, tag.parameter, tag.convention)
    if tag.family == 'R':
        return make_R(s, tag.parameter)
    if tag.family == 'S':
        return make_S(s, tag.parameter)
    raise ValueError(f"未知的生成元族: {tag.family}")


def build_word(s: SurfaceSpec, tags: Iterable[GeneratorTag]) -> Morphism:
    """g1;g2;...;gk 表示 g1∘g2∘...∘gk，空记录为恒等"""
    result = identity(s)
    for tag in tags:
        result = compose(result, from_tag(s, tag))
    return result
