"""
B 的 K-代数自同态

态射以 x, y, z 的像保存，构造时校验 f(T(x))·T(y) - φ(T(x), T(z)) = 0。
由生成元构造的态射附带生成元记录（word），据此求逆。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from algebra.field import FieldElement
from algebra.poly import Poly, divide_exact, substitute
from autos.unity import unity_decompose
from errors import ConsistencyError, NotDivisible, NotInvertibleRecord, RelationViolated, SurfaceMismatch
from surface.ring import BElement, SurfaceSpec, normalize


class TConvention(Enum):
    # T(y) = λ^(-j)·y，由关系式决定
    RELATION = 'relation'
    # T(y) = λ^j·y，仅当 λ^(2j) = 1 时能通过校验
    PRINTED = 'printed'


@dataclass(frozen=True)
class GeneratorTag:
    """生成元记录：族 H / T / R / S 及其参数"""
    family: str
    parameter: Union[Poly, FieldElement]
    convention: TConvention = TConvention.RELATION

    @property
    def parameter_name(self) -> str:
        return {'H': 'h', 'T': 'lambda', 'R': 'lambda', 'S': 'mu'}[self.family]

    def inverse(self) -> "GeneratorTag":
        if self.family == 'H':
            return GeneratorTag('H', -self.parameter)
        return GeneratorTag(self.family, self.parameter.inverse(), self.convention)

    def describe(self) -> str:
        return f"{self.family}[{self.parameter_name}={self.parameter}]"


Word = Tuple[GeneratorTag, ...]


def format_word(word: Optional[Word]) -> str:
    if word is None:
        return "<raw>"
    if not word:
        return "id"
    return ";".join(tag.describe() for tag in word)


class Morphism:
    """已校验的自同态"""

    __slots__ = ('surface', 'tx', 'ty', 'tz', 'word')

    def __init__(self, surface: SurfaceSpec, tx: BElement, ty: BElement, tz: BElement,
                 word: Optional[Word] = None):
        self.surface = surface
        self.tx = tx
        self.ty = ty
        self.tz = tz
        self.word = word

    @property
    def images(self) -> Dict[str, BElement]:
        return {'x': self.tx, 'y': self.ty, 'z': self.tz}

    def __call__(self, b: BElement) -> BElement:
        return apply_morphism(self, b)

    def describe(self) -> Dict[str, str]:
        return {
            'word': format_word(self.word),
            'x': str(self.tx),
            'y': str(self.ty),
            'z': str(self.tz),
        }

    def __repr__(self) -> str:
        return f"Morphism({format_word(self.word)}: x->{self.tx}, y->{self.ty}, z->{self.tz})"


def _check_surface(a: SurfaceSpec, b: SurfaceSpec) -> None:
    if a != b:
        raise SurfaceMismatch(f"态射属于不同的曲面: {a} 与 {b}")


def relation_image(s: SurfaceSpec, tx: BElement, ty: BElement, tz: BElement) -> BElement:
    """f(tx)·ty - φ(tx, tz) 的规范形"""
    f_image = normalize(s, substitute(s.f, {'X': tx.rep}))
    phi_image = normalize(s, substitute(s.phi, {'X': tx.rep, 'Z': tz.rep}))
    return f_image * ty - phi_image


def make_morphism(s: SurfaceSpec, tx: BElement, ty: BElement, tz: BElement,
                  word: Optional[Word] = None) -> Morphism:
    """
    校验并构造态射

    Raises:
        SurfaceMismatch: 像不属于该曲面
        RelationViolated: 定义关系不被保持
    """
    for image in (tx, ty, tz):
        _check_surface(image.surface, s)
    residue = relation_image(s, tx, ty, tz)
    if not residue.is_zero():
        raise RelationViolated(f"态射不保持定义关系，残差为 {residue}", residue=residue)
    return Morphism(s, tx, ty, tz, word)


def identity(s: SurfaceSpec) -> Morphism:
    return Morphism(s, s.x, s.y, s.z, ())


def apply_morphism(m: Morphism, b: BElement) -> BElement:
    """把 X, Y, Z 代换为 x, y, z 的像并约化"""
    _check_surface(b.surface, m.surface)
    images = {'X': m.tx.rep, 'Y': m.ty.rep, 'Z': m.tz.rep}
    return normalize(m.surface, substitute(b.rep, images))


def compose(a: Morphism, b: Morphism) -> Morphism:
    """a∘b：像为 a(b(x)), a(b(y)), a(b(z))"""
    _check_surface(a.surface, b.surface)
    word = a.word + b.word if a.word is not None and b.word is not None else None
    return make_morphism(a.surface, a(b.tx), a(b.ty), a(b.tz), word)


def morphism_equal(a: Morphism, b: Morphism) -> bool:
    _check_surface(a.surface, b.surface)
    return a.tx == b.tx and a.ty == b.ty and a.tz == b.tz


def invert(m: Morphism) -> Morphism:
    """
    按生成元记录求逆：记录逆序，每个生成元取逆，并校验 m∘m⁻¹ = id

    Raises:
        NotInvertibleRecord: 态射没有生成元记录
        ConsistencyError: 校验失败
    """
    # 生成元构造依赖本模块
    from autos.generators import build_word

    if m.word is None:
        raise NotInvertibleRecord("态射由原始像构造，没有生成元记录")
    inverse = build_word(m.surface, tuple(tag.inverse() for tag in reversed(m.word)))
    if not morphism_equal(compose(m, inverse), identity(m.surface)):
        raise ConsistencyError(f"逆态射校验失败: {format_word(m.word)}")
    return inverse


@dataclass
class AutomorphismShape:
    """T(x) = λx, T(z) = αz + b(x) 形式的检查结果"""
    lambda_: Optional[FieldElement] = None
    alpha: Optional[FieldElement] = None
    b: Optional[Poly] = None
    s: Optional[int] = None
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def describe(self) -> Dict[str, object]:
        return {
            'lambda': str(self.lambda_) if self.lambda_ is not None else None,
            'alpha': str(self.alpha) if self.alpha is not None else None,
            'b': str(self.b) if self.b is not None else None,
            's': self.s,
            'holds': self.holds,
            'violations': list(self.violations),
        }


def automorphism_shape(m: Morphism) -> AutomorphismShape:
    """检查 M(x) = λx (λ^s = 1)，M(z) = αz + b(x) (f | b) 且 φ(αZ) = α^d φ(Z)"""
    s = m.surface
    shape = AutomorphismShape(s=unity_decompose(s.f).s)

    x_rep = m.tx.rep
    if x_rep.only_uses('X') and set(x_rep.terms) == {(1, 0, 0)}:
        shape.lambda_ = x_rep.coefficient((1, 0, 0))
        if not shape.lambda_.is_root_of_unity(shape.s):
            shape.violations.append(f"λ^{shape.s} ≠ 1")
    else:
        shape.violations.append(f"M(x) = {x_rep} 不是 λx")

    z_rep = m.tz.rep
    linear = z_rep.coeff_in('Z', 1)
    if z_rep.uses('Y') or z_rep.degree('Z') != 1 or not linear.is_constant():
        shape.violations.append(f"M(z) = {z_rep} 不是 αz + b(x)")
        return shape
    shape.alpha = linear.constant_value()
    shape.b = z_rep.coeff_in('Z', 0)
    try:
        divide_exact(shape.b, s.f)
    except NotDivisible:
        shape.violations.append(f"f ∤ b = {shape.b}")
    alpha_z = Poly.var(s.modulus, 'Z').scale(shape.alpha)
    if substitute(s.phi, {'Z': alpha_z}) != s.phi.scale(shape.alpha ** s.d):
        shape.violations.append(f"φ(αZ) ≠ α^d φ(Z)，α = {shape.alpha}")
    return shape
