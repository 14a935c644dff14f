"""
基域 K = Q[t]/(m(t)) 的精确算术

m(t) 由用户给出并声明不可约；求逆时若扩展欧几里得算法得到非平凡公因子，
抛出 ZeroDivisorInField 并附带该因子。m(t) = t 表示 K = Q。
"""

import operator
from fractions import Fraction
from typing import Tuple, Union

from sympy import QQ, Rational, cyclotomic_poly
from sympy.polys.rings import PolyElement, ring

from errors import DegreeTooSmall, DivisionByZero, NotApplicable, NotMonic, ZeroDivisorInField

# 所有模多项式与域元素共享的 Q[t]
T_RING, T_GEN = ring("t", QQ)

Scalar = Union[int, Fraction, Rational, "FieldElement"]


def to_rational(value) -> "QQ.dtype":
    """把 int / Fraction / sympy.Rational 转换为 QQ 元素"""
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        return QQ(int(value))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, Rational):
        return QQ(int(value.p), int(value.q))
    raise TypeError(f"无法转换为有理数: {value!r}")


def format_rational(value) -> str:
    """有理数的规范文本：最简分数，分母为正"""
    numerator = int(value.numerator)
    denominator = int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def format_t_poly(poly: PolyElement) -> str:
    """按t的降幂打印 Q[t] 中的多项式，例如 3/2*t + 1"""
    if not poly:
        return "0"
    chunks = []
    for (exponent,), coeff in sorted(poly.items(), reverse=True):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if exponent == 0:
            body = format_rational(magnitude)
        else:
            power = "t" if exponent == 1 else f"t^{exponent}"
            body = power if magnitude == QQ.one else f"{format_rational(magnitude)}*{power}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)


class FieldModulus:
    """模多项式 m(t)：首一，次数 ≥ 1"""

    __slots__ = ('_m', '_degree')

    def __init__(self, m: PolyElement):
        if m.ring != T_RING:
            m = T_RING(m)
        if not m or m.degree() < 1:
            raise DegreeTooSmall(f"模多项式次数必须 ≥ 1: {format_t_poly(m)}")
        if m.LC != QQ.one:
            raise NotMonic(f"模多项式必须首一: {format_t_poly(m)}")
        self._m = m
        self._degree = m.degree()

    @classmethod
    def rational(cls) -> "FieldModulus":
        """m(t) = t，即 K = Q"""
        return cls(T_GEN)

    @classmethod
    def cyclotomic(cls, n: int) -> "FieldModulus":
        """n 次分圆多项式 Φ_n(t)，提供 n 次本原单位根"""
        coeffs = cyclotomic_poly(n, polys=True).all_coeffs()
        return cls(T_RING.from_list([to_rational(c) for c in coeffs]))

    @property
    def poly(self) -> PolyElement:
        return self._m

    @property
    def degree(self) -> int:
        return self._degree

    def zero(self) -> "FieldElement":
        return FieldElement(self, T_RING.zero, reduced=True)

    def one(self) -> "FieldElement":
        return FieldElement(self, T_RING.one, reduced=True)

    def generator(self) -> "FieldElement":
        """t 在 K 中的像"""
        return FieldElement(self, T_GEN)

    def constant(self, value: Scalar) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.modulus != self:
                raise ValueError(f"域不一致: {value.modulus} 与 {self}")
            return value
        return FieldElement(self, T_RING.ground_new(to_rational(value)), reduced=True)

    def reduce(self, poly: PolyElement) -> PolyElement:
        if poly.degree() >= self._degree:
            return poly.rem(self._m)
        return poly

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldModulus) and self._m == other._m

    def __hash__(self) -> int:
        return hash(self._m)

    def __str__(self) -> str:
        return format_t_poly(self._m)

    def __repr__(self) -> str:
        return f"FieldModulus({self})"


class FieldElement:
    """K 中的元素，以模 m(t) 约化后的 t 多项式表示"""

    __slots__ = ('_modulus', '_value')

    def __init__(self, modulus: FieldModulus, value: PolyElement, reduced: bool = False):
        self._modulus = modulus
        self._value = value if reduced else modulus.reduce(value)

    @property
    def modulus(self) -> FieldModulus:
        return self._modulus

    @property
    def value(self) -> PolyElement:
        return self._value

    @property
    def coeffs(self) -> Tuple:
        """长度为 deg(m) 的系数向量（从常数项开始）"""
        vector = [QQ.zero] * self._modulus.degree
        for (exponent,), coeff in self._value.items():
            vector[exponent] = coeff
        return tuple(vector)

    def is_zero(self) -> bool:
        return not self._value

    def is_one(self) -> bool:
        return self._value == T_RING.one

    def is_rational(self) -> bool:
        """是否属于素域 Q"""
        return self._value.degree() <= 0

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} 不是有理数")
        return self._value.const()

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other._modulus != self._modulus:
                raise ValueError(f"域不一致: {other._modulus} 与 {self._modulus}")
            return other
        return self._modulus.constant(other)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self._modulus, self._value + other._value, reduced=True)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self._modulus, self._value - other._value, reduced=True)

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(self._modulus, -self._value, reduced=True)

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self._modulus, self._value * other._value)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self._modulus.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "FieldElement":
        """
        通过扩展欧几里得算法求逆

        Raises:
            DivisionByZero: 元素为零
            ZeroDivisorInField: gcd(a, m) 非平凡，m 可约
        """
        if self.is_zero():
            raise DivisionByZero("域元素 0 不可逆")
        if self.is_rational():
            return FieldElement(self._modulus, T_RING.ground_new(QQ.one / self._value.const()), reduced=True)
        s, _, g = self._value.gcdex(self._modulus.poly)
        if g != T_RING.one:
            raise ZeroDivisorInField(
                f"{self} 与模多项式 {self._modulus} 有公因子 {format_t_poly(g)}，m(t) 可约",
                factor=format_t_poly(g),
            )
        return FieldElement(self._modulus, s)

    def is_root_of_unity(self, n: int) -> bool:
        if n < 1:
            raise NotApplicable(f"单位根的次数必须 ≥ 1: {n}")
        return (self ** n).is_one()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self._modulus == other._modulus and self._value == other._value
        if isinstance(other, (int, Fraction, Rational)):
            return self._value == T_RING.ground_new(to_rational(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._modulus, self._value))

    def __str__(self) -> str:
        return format_t_poly(self._value)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


_FIELD_OPS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """域运算 add / sub / mul / div"""
    try:
        func = _FIELD_OPS[op]
    except KeyError:
        raise ValueError(f"未知的域运算: {op}")
    return func(a, b)


def is_root_of_unity(a: FieldElement, n: int) -> bool:
    """a^n 是否恰好等于 1"""
    return a.is_root_of_unity(n)
