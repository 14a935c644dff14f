"""
K[x] 中的 f-进展开 p = Σ h_n(X)·f(X)^n，deg h_n ≤ r-1
"""

from dataclasses import dataclass
from typing import Dict

from algebra.poly import Poly, divmod_monic
from errors import WrongVariables, ZeroPolynomial
from surface.ring import SurfaceSpec


@dataclass(frozen=True)
class FAdicExpansion:
    """digits: {n: h_n}，只保存非零数字"""
    digits: Dict[int, Poly]

    def reconstruct(self, f: Poly) -> Poly:
        total = Poly.zero(f.modulus)
        for n, digit in self.digits.items():
            total = total + digit * f ** n
        return total

    def describe(self) -> Dict[str, str]:
        return {f"h{n}": str(digit) for n, digit in sorted(self.digits.items())}


def fadic_digits(p: Poly, f: Poly) -> Dict[int, Poly]:
    """反复对 f 做带余除法得到各位数字"""
    digits = {}
    current = p
    n = 0
    while not current.is_zero():
        current, remainder = divmod_monic(current, f, 'X')
        if not remainder.is_zero():
            digits[n] = remainder
        n += 1
    return digits


def fadic_expand(s: SurfaceSpec, p: Poly) -> FAdicExpansion:
    """
    以 f 为基的展开

    Raises:
        WrongVariables: p 不属于 K[X]
        ZeroPolynomial: p = 0
    """
    if not p.only_uses('X'):
        raise WrongVariables(f"f-进展开只适用于 K[X] 中的多项式: {p}")
    if p.is_zero():
        raise ZeroPolynomial("零多项式没有 f-进展开")
    return FAdicExpansion(fadic_digits(p, s.f))
