"""
环 T = K[x, f(x)^(-1), z] 上的权滤过

K[x, f^(-1)] 的基：x^n (n ≥ 0) 的指标为 n；x^i/f^j (0 ≤ i ≤ r-1, j ≥ 1) 的指标为 i - j·r。
基单项式 (x 部分指标 n) · z^k 的权为 n·μ + k·ν。
"""

from dataclasses import dataclass
from typing import List

from algebra.field import FieldElement
from algebra.poly import Poly, divide_exact, divmod_monic
from errors import NotApplicable, NotDivisible, SurfaceMismatch, WrongVariables, ZeroElement
from filtration.fadic import fadic_digits
from surface.ring import BElement, SurfaceSpec


@dataclass(frozen=True)
class WeightAssignment:
    """x 的权 μ ≥ 1，z 的权 ν"""
    mu: int
    nu: int

    def __post_init__(self):
        if self.mu < 1:
            raise NotApplicable(f"x 的权 μ 必须 ≥ 1: {self.mu}")


class TElement:
    """num(X,Z) / f^denom_exp，约化到 f ∤ num 或 denom_exp = 0"""

    __slots__ = ('surface', 'num', 'denom_exp')

    def __init__(self, surface: SurfaceSpec, num: Poly, denom_exp: int = 0):
        if num.uses('Y'):
            raise WrongVariables(f"T 的元素分子不能含有 Y: {num}")
        if num.is_zero():
            denom_exp = 0
        while denom_exp > 0:
            try:
                num = divide_exact(num, surface.f)
            except NotDivisible:
                break
            denom_exp -= 1
        self.surface = surface
        self.num = num
        self.denom_exp = denom_exp

    def _aligned(self, other: "TElement"):
        if other.surface != self.surface:
            raise SurfaceMismatch(f"元素属于不同的曲面: {self.surface} 与 {other.surface}")
        k = max(self.denom_exp, other.denom_exp)
        f = self.surface.f
        return self.num * f ** (k - self.denom_exp), other.num * f ** (k - other.denom_exp), k

    def __add__(self, other: "TElement") -> "TElement":
        a, b, k = self._aligned(other)
        return TElement(self.surface, a + b, k)

    def __sub__(self, other: "TElement") -> "TElement":
        a, b, k = self._aligned(other)
        return TElement(self.surface, a - b, k)

    def __neg__(self) -> "TElement":
        return TElement(self.surface, -self.num, self.denom_exp)

    def __mul__(self, other: "TElement") -> "TElement":
        if other.surface != self.surface:
            raise SurfaceMismatch(f"元素属于不同的曲面: {self.surface} 与 {other.surface}")
        return TElement(self.surface, self.num * other.num, self.denom_exp + other.denom_exp)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, TElement) and self.surface == other.surface
                and self.num == other.num and self.denom_exp == other.denom_exp)

    def __hash__(self) -> int:
        return hash((self.num, self.denom_exp))

    def __str__(self) -> str:
        if self.denom_exp == 0:
            return str(self.num)
        denominator = "f" if self.denom_exp == 1 else f"f^{self.denom_exp}"
        return f"({self.num})/{denominator}"

    def __repr__(self) -> str:
        return f"TElement({self})"


@dataclass(frozen=True)
class BasisTerm:
    """coeff · x^i · z^k / f^j，x 部分指标 index = i - j·r"""
    coeff: FieldElement
    i: int
    j: int
    k: int
    index: int
    weight: int


def embed_in_T(b: BElement) -> TElement:
    """代入 y = φ(x,z)/f(x) 并通分"""
    s = b.surface
    top = b.rep.degree('Y')
    if top <= 0:
        return TElement(s, b.rep, 0)
    numerator = Poly.zero(s.modulus)
    for j in range(top + 1):
        coeff = b.rep.coeff_in('Y', j)
        if coeff.is_zero():
            continue
        numerator = numerator + coeff * s.phi ** j * s.f ** (top - j)
    return TElement(s, numerator, top)


def basis_terms(e: TElement, w: WeightAssignment) -> List[BasisTerm]:
    """把 e 分解到基 C_n ⊗ z^k 上"""
    s = e.surface
    denominator = s.f ** e.denom_exp
    terms = []
    for k in range(e.num.degree('Z') + 1):
        coeff_k = e.num.coeff_in('Z', k)
        if coeff_k.is_zero():
            continue
        polynomial_part, remainder = divmod_monic(coeff_k, denominator, 'X')
        for (i, _, _), c in polynomial_part.terms.items():
            terms.append(BasisTerm(c, i, 0, k, i, i * w.mu + k * w.nu))
        for n, digit in fadic_digits(remainder, s.f).items():
            j = e.denom_exp - n
            for (i, _, _), c in digit.terms.items():
                index = i - j * s.r
                terms.append(BasisTerm(c, i, j, k, index, index * w.mu + k * w.nu))
    return terms


def weight(e: TElement, w: WeightAssignment) -> int:
    """
    最大的基单项式权

    Raises:
        ZeroElement: e = 0
    """
    if e.is_zero():
        raise ZeroElement("零元素没有权")
    return max(term.weight for term in basis_terms(e, w))


def _assemble(s: SurfaceSpec, terms: List[BasisTerm]) -> TElement:
    top = max(term.j for term in terms)
    numerator = Poly.zero(s.modulus)
    for term in terms:
        monomial = Poly.monomial(s.modulus, (term.i, 0, term.k), term.coeff)
        numerator = numerator + monomial * s.f ** (top - term.j)
    return TElement(s, numerator, top)


def leading_form(e: TElement, w: WeightAssignment) -> TElement:
    """
    达到最大权的基单项式之和

    Raises:
        ZeroElement: e = 0
    """
    if e.is_zero():
        raise ZeroElement("零元素没有首项形式")
    terms = basis_terms(e, w)
    top = max(term.weight for term in terms)
    return _assemble(e.surface, [term for term in terms if term.weight == top])
