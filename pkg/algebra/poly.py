"""
K 上关于 X, Y, Z 的稀疏多项式

项以指数三元组 (eX, eY, eZ) 为键，系数为非零 FieldElement。
规范顺序按 (eZ, eY, eX) 字典序降序，打印与比较均依赖该顺序。
"""

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from algebra.field import FieldElement, FieldModulus, Scalar, format_rational
from errors import DivisionByZero, NotDivisible, NotMonic, NotMonicInZ

Monomial = Tuple[int, int, int]

VARIABLES = ('X', 'Y', 'Z')
VAR_INDEX = {'X': 0, 'Y': 1, 'Z': 2}


def order_key(monomial: Monomial) -> Tuple[int, int, int]:
    """规范单项式序的排序键 (eZ, eY, eX)"""
    return monomial[2], monomial[1], monomial[0]


def _var_index(var: str) -> int:
    try:
        return VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"未知变量: {var}")


def _power_text(name: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return name
    return f"{name}^{exponent}"


def _monomial_text(monomial: Monomial) -> str:
    parts = [_power_text(name, e) for name, e in zip(VARIABLES, monomial)]
    return "*".join(p for p in parts if p)


class Poly:
    """K[X,Y,Z] 中的多项式，不可变"""

    __slots__ = ('_modulus', '_terms', '_hash')

    def __init__(self, modulus: FieldModulus, terms: Optional[Mapping[Monomial, FieldElement]] = None):
        self._modulus = modulus
        self._terms: Dict[Monomial, FieldElement] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }
        self._hash = None

    @classmethod
    def _raw(cls, modulus: FieldModulus, terms: Dict[Monomial, FieldElement]) -> "Poly":
        """terms 已保证无零系数时的快速构造"""
        poly = cls.__new__(cls)
        poly._modulus = modulus
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, modulus: FieldModulus) -> "Poly":
        return cls._raw(modulus, {})

    @classmethod
    def constant(cls, modulus: FieldModulus, value: Scalar) -> "Poly":
        return cls(modulus, {(0, 0, 0): modulus.constant(value)})

    @classmethod
    def monomial(cls, modulus: FieldModulus, exponents: Monomial, coeff: Scalar = 1) -> "Poly":
        return cls(modulus, {tuple(exponents): modulus.constant(coeff)})

    @classmethod
    def var(cls, modulus: FieldModulus, name: str) -> "Poly":
        exponents = [0, 0, 0]
        exponents[_var_index(name)] = 1
        return cls.monomial(modulus, tuple(exponents))

    @classmethod
    def univariate(cls, modulus: FieldModulus, coeffs: Mapping[int, Scalar], var: str = 'X') -> "Poly":
        """由 {指数: 系数} 构造单变量多项式"""
        index = _var_index(var)
        terms = {}
        for exponent, coeff in coeffs.items():
            monomial = [0, 0, 0]
            monomial[index] = exponent
            terms[tuple(monomial)] = modulus.constant(coeff)
        return cls(modulus, terms)

    @property
    def modulus(self) -> FieldModulus:
        return self._modulus

    @property
    def terms(self) -> Dict[Monomial, FieldElement]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, FieldElement]]:
        """按规范序（降序）遍历各项"""
        for monomial in sorted(self._terms, key=order_key, reverse=True):
            yield monomial, self._terms[monomial]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self._terms)

    def constant_value(self) -> FieldElement:
        return self._terms.get((0, 0, 0), self._modulus.zero())

    def coefficient(self, monomial: Monomial) -> FieldElement:
        return self._terms.get(tuple(monomial), self._modulus.zero())

    def variables(self) -> frozenset:
        used = set()
        for monomial in self._terms:
            for name, exponent in zip(VARIABLES, monomial):
                if exponent:
                    used.add(name)
        return frozenset(used)

    def uses(self, var: str) -> bool:
        index = _var_index(var)
        return any(m[index] for m in self._terms)

    def only_uses(self, allowed: Iterable[str]) -> bool:
        return self.variables() <= frozenset(allowed)

    def degree(self, var: str) -> int:
        """关于 var 的次数，零多项式为 -1"""
        index = _var_index(var)
        return max((m[index] for m in self._terms), default=-1)

    def coeff_in(self, var: str, k: int) -> "Poly":
        """把多项式视作 var 的多项式时 var^k 的系数"""
        index = _var_index(var)
        terms = {}
        for monomial, coeff in self._terms.items():
            if monomial[index] == k:
                reduced = list(monomial)
                reduced[index] = 0
                terms[tuple(reduced)] = coeff
        return Poly._raw(self._modulus, terms)

    def leading_coeff_in(self, var: str) -> "Poly":
        degree = self.degree(var)
        if degree < 0:
            return Poly.zero(self._modulus)
        return self.coeff_in(var, degree)

    def is_monic_in(self, var: str) -> bool:
        lead = self.leading_coeff_in(var)
        return lead.is_constant() and lead.constant_value().is_one()

    def univariate_coeffs(self, var: str = 'X') -> Dict[int, FieldElement]:
        """单变量多项式的 {指数: 系数}；含其他变量时抛出 ValueError"""
        if not self.only_uses([var]):
            raise ValueError(f"{self} 不是关于 {var} 的单变量多项式")
        index = _var_index(var)
        return {m[index]: c for m, c in self._terms.items()}

    def shift(self, var: str, k: int) -> "Poly":
        """乘以 var^k"""
        if k == 0:
            return self
        index = _var_index(var)
        terms = {}
        for monomial, coeff in self._terms.items():
            shifted = list(monomial)
            shifted[index] += k
            terms[tuple(shifted)] = coeff
        return Poly._raw(self._modulus, terms)

    def scale(self, c: Scalar) -> "Poly":
        c = self._modulus.constant(c)
        if c.is_zero():
            return Poly.zero(self._modulus)
        return Poly._raw(self._modulus, {m: v * c for m, v in self._terms.items()})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other._modulus != self._modulus:
                raise ValueError(f"域不一致: {other._modulus} 与 {self._modulus}")
            return other
        return Poly.constant(self._modulus, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            total = terms.get(monomial)
            total = coeff if total is None else total + coeff
            if total.is_zero():
                terms.pop(monomial, None)
            else:
                terms[monomial] = total
        return Poly._raw(self._modulus, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self._modulus, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        terms: Dict[Monomial, FieldElement] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                monomial = (a1 + a2, b1 + b2, c1 + c2)
                product = u * v
                current = terms.get(monomial)
                terms[monomial] = product if current is None else current + product
        return Poly(self._modulus, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("多项式不支持负整数次幂")
        result = Poly.constant(self._modulus, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._modulus == other._modulus and self._terms == other._terms
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._modulus, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _coefficient_chunk(coeff: FieldElement, variables: str, sole: bool) -> Tuple[bool, str]:
    """返回 (是否为负, 去掉符号后的文本)"""
    if coeff.is_rational():
        value = coeff.rational_value()
        negative = value < 0
        magnitude = -value if negative else value
        if not variables:
            return negative, format_rational(magnitude)
        if magnitude == 1:
            return negative, variables
        return negative, f"{format_rational(magnitude)}*{variables}"
    text = str(coeff)
    if not variables:
        return False, text if sole else f"({text})"
    return False, f"({text})*{variables}"


def format_poly(poly: Poly) -> str:
    """
    规范文本形式

    (eZ, eY) 相同的项合并为一个 X 系数，多项时加括号，例如 (X^2 - 1)*Y；
    常数组 (eZ, eY) = (0, 0) 逐项展开。
    """
    if poly.is_zero():
        return "0"
    groups: Dict[Tuple[int, int], list] = {}
    for monomial, coeff in poly.items():
        groups.setdefault((monomial[2], monomial[1]), []).append((monomial, coeff))

    sole = len(poly) == 1
    chunks = []
    for (ez, ey), members in groups.items():
        if len(members) == 1 or (ez, ey) == (0, 0):
            rendered = [_coefficient_chunk(c, _monomial_text(m), sole) for m, c in members]
        else:
            inner = Poly._raw(poly.modulus, {(m[0], 0, 0): c for m, c in members})
            rendered = [(False, f"({format_poly(inner)})*{_monomial_text((0, ey, ez))}")]
        for negative, body in rendered:
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    """多项式运算 add / sub / mul"""
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise ValueError(f"未知的多项式运算: {op}")


def partial_derivative(p: Poly, var: str) -> Poly:
    """形式偏导数"""
    index = _var_index(var)
    terms = {}
    for monomial, coeff in p.terms.items():
        exponent = monomial[index]
        if exponent == 0:
            continue
        lowered = list(monomial)
        lowered[index] = exponent - 1
        terms[tuple(lowered)] = coeff * exponent
    return Poly(p.modulus, terms)


def substitute(p: Poly, images: Mapping[str, Poly]) -> Poly:
    """
    同时代换变量

    Args:
        p: 被代换的多项式
        images: 变量到像的映射，未给出的变量保持不变

    Returns:
        代换后的多项式
    """
    modulus = p.modulus
    targets = [images[name] if name in images else Poly.var(modulus, name) for name in VARIABLES]
    powers = [[Poly.constant(modulus, 1)] for _ in VARIABLES]

    def power(index: int, exponent: int) -> Poly:
        cache = powers[index]
        while len(cache) <= exponent:
            cache.append(cache[-1] * targets[index])
        return cache[exponent]

    result = Poly.zero(modulus)
    for monomial, coeff in p.terms.items():
        term = Poly.constant(modulus, coeff)
        for index, exponent in enumerate(monomial):
            if exponent:
                term = term * power(index, exponent)
        result = result + term
    return result


def _leading(poly: Poly) -> Tuple[Monomial, FieldElement]:
    monomial = max(poly.terms, key=order_key)
    return monomial, poly.coefficient(monomial)


def divide_exact(p: Poly, q: Poly) -> Poly:
    """
    精确除法 p / q

    主理想 (q) 的生成元本身就是 Gröbner 基，因此单除数除法的余项为零当且仅当 q 整除 p。

    Raises:
        DivisionByZero: q 为零
        NotDivisible: 余项非零，remainder 为见证
    """
    if q.is_zero():
        raise DivisionByZero(f"除数为零: {p} / 0")
    modulus = p.modulus
    lead_m, lead_c = _leading(q)
    lead_inv = lead_c.inverse()
    quotient: Dict[Monomial, FieldElement] = {}
    remainder: Dict[Monomial, FieldElement] = {}
    current = p
    while not current.is_zero():
        monomial, coeff = _leading(current)
        if all(a >= b for a, b in zip(monomial, lead_m)):
            factor_m = tuple(a - b for a, b in zip(monomial, lead_m))
            factor_c = coeff * lead_inv
            quotient[factor_m] = quotient.get(factor_m, modulus.zero()) + factor_c
            current = current - Poly._raw(modulus, {factor_m: factor_c}) * q
        else:
            remainder[monomial] = coeff
            current = current - Poly._raw(modulus, {monomial: coeff})
    if remainder:
        witness = Poly(modulus, remainder)
        raise NotDivisible(f"{p} 不能被 {q} 整除，余项: {witness}", remainder=witness)
    return Poly(modulus, quotient)


def divmod_monic(p: Poly, q: Poly, var: str) -> Tuple[Poly, Poly]:
    """
    把 p, q 视作 var 的多项式做带余除法，q 关于 var 必须首一

    Returns:
        (商, 余项)，满足 p = 商·q + 余项 且 deg_var(余项) < deg_var(q)

    Raises:
        NotMonicInZ: var 为 Z 且 q 关于 Z 不首一
        NotMonic: 其他变量下 q 不首一
    """
    if q.is_zero() or not q.is_monic_in(var):
        error = NotMonicInZ if var == 'Z' else NotMonic
        raise error(f"{q} 关于 {var} 不是首一的")
    n = q.degree(var)
    modulus = p.modulus
    quotient = Poly.zero(modulus)
    remainder = p
    while remainder.degree(var) >= n:
        k = remainder.degree(var)
        step = remainder.coeff_in(var, k).shift(var, k - n)
        quotient = quotient + step
        remainder = remainder - step * q
    return quotient, remainder


def divmod_in_Z(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """关于 Z 的带余除法，q 关于 Z 首一"""
    return divmod_monic(p, q, 'Z')
