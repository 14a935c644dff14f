"""
性质检验套件

每个套件的签名为 (rng, trials) -> SuiteResult，结果确定地依赖于 rng 的种子。
"""

import random
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Callable, Dict, List, Optional

from algebra.field import FieldModulus
from algebra.poly import Poly, substitute
from autos.generators import build_word, make_H, make_T
from autos.morphism import (GeneratorTag, TConvention, automorphism_shape, compose, identity,
                            invert, morphism_equal, relation_image)
from autos.unity import unity_decompose
from errors import DanielewskiError, NotRootOfUnity, RelationViolated
from filtration.fadic import fadic_expand
from filtration.weights import WeightAssignment, embed_in_T, leading_form, weight
from lnd.classifier import LNDKind, classify_lnd
from lnd.derivation import canonical_D, make_derivation, nilpotency_index, power_apply
from surface.loader import surface_from_mapping
from surface.ring import SurfaceSpec, in_kx, normalize
from surface.sampling import random_element, random_kx, random_poly, random_surface


SIGMA0 = {'modulus': 't', 'f': 'X^2 - 1', 'phi': 'Z^2'}
SIGMA1 = {'modulus': 't', 'f': 'X^22 + 2*X^18 + X^10 - 2*X^2', 'phi': 'Z^3 + Z + 1'}

# 生成元序列检验中 R 的参数
_R_PARAMETERS = ['2', '-1', '1/2', '3', '-1/3']


@dataclass
class SuiteResult:
    name: str
    trials: int
    violations: int = 0
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, message: str) -> None:
        self.violations += 1
        # 只保留前若干条明细
        if len(self.details) < 10:
            self.details.append(message)

    def describe(self) -> Dict[str, object]:
        return {
            'name': self.name,
            'trials': self.trials,
            'violations': self.violations,
            'passed': self.passed,
            'details': list(self.details),
        }


def standard_surface(spec: Dict[str, str], modulus: Optional[str] = None) -> SurfaceSpec:
    return surface_from_mapping(spec, modulus, source='standard')


def canonical_nilpotency(rng: random.Random, trials: int = 20) -> SuiteResult:
    """𝒟 下 y 的幂零指数为 d+1 且 𝒟^d(y) = d!·f^(d-1)，z 为 2，x 为 1"""
    result = SuiteResult('canonical_nilpotency', trials)
    for _ in range(trials):
        s = random_surface(rng)
        D = canonical_D(s)
        expected = s.from_kx(s.f ** (s.d - 1)).scale(factorial(s.d))
        if nilpotency_index(D, s.y, cap=s.d + 5) != s.d + 1:
            result.fail(f"y 的幂零指数不是 d+1: {s}")
        if power_apply(D, s.y, s.d) != expected:
            result.fail(f"𝒟^d(y) ≠ d!·f^(d-1): {s}")
        if nilpotency_index(D, s.z) != 2 or nilpotency_index(D, s.x) != 1:
            result.fail(f"z 或 x 的幂零指数错误: {s}")
    return result


def lnd_classifier(rng: random.Random, trials: int = 50) -> SuiteResult:
    """h·𝒟 的分类恢复 h；扰动后的导子被拒绝"""
    result = SuiteResult('lnd_classifier', trials)
    surfaces = [standard_surface(SIGMA0), standard_surface(SIGMA1)]
    for n in range(trials):
        s = surfaces[n % 2]
        h = random_kx(s.modulus, rng, max_degree=5)
        D = canonical_D(s).scaled(h)
        classification = classify_lnd(D)
        if h.is_zero():
            if classification.kind is not LNDKind.ZERO:
                result.fail(f"零导子分类错误: {classification.kind}")
        elif classification.kind is not LNDKind.LND or classification.h != h:
            result.fail(f"未恢复 h = {h}: {classification.describe()}")

        mode = rng.randrange(3)
        dx, dy, dz = D.dx, D.dy, D.dz
        if mode == 0:
            dx = dx + s.x
        elif mode == 1:
            dz = dz + s.one()
        else:
            dy = dy + s.z
        try:
            perturbed = make_derivation(s, dx, dy, dz)
        except RelationViolated:
            continue
        if classify_lnd(perturbed).kind is not LNDKind.NOT_LND:
            result.fail(f"扰动后的导子被接受 (mode={mode}, h={h})")
    return result


def kernel_theorem(rng: random.Random, trials: int = 200) -> SuiteResult:
    """𝒟(b) = 0 ⟺ b ∈ K[x]"""
    result = SuiteResult('kernel_theorem', trials)
    s = standard_surface(SIGMA0)
    D = canonical_D(s)
    for _ in range(trials):
        b = random_element(s, rng)
        annihilated = D(b).is_zero()
        if annihilated != (in_kx(b) is not None):
            result.fail(f"核判定不一致: b = {b}")
    return result


def _brute_force_period(exponents: List[int], i: int) -> int:
    degree = max(exponents)
    for candidate in range(degree, 0, -1):
        if all((e - i) % candidate == 0 for e in exponents):
            return candidate
    return 1


def unity_decomposition(rng: random.Random, trials: int = 100) -> SuiteResult:
    """由 X^i·h(X^s) 构造的 g 能被精确分解"""
    result = SuiteResult('unity_decomposition', trials)
    modulus = FieldModulus.rational()
    done = 0
    while done < trials:
        i = rng.randint(0, 4)
        period = rng.randint(1, 6)
        degree_h = rng.randint(1, 4)
        coeffs = {e: rng.randint(-3, 3) for e in range(1, degree_h)}
        coeffs[0] = rng.choice([-3, -2, -1, 1, 2, 3])
        coeffs[degree_h] = 1
        if period == 1 and degree_h >= 1:
            coeffs[degree_h - 1] = 0
        exponents_h = [e for e, c in coeffs.items() if c]
        step = 0
        for e in exponents_h:
            step = gcd(step, e)
        if step != 1 or coeffs[0] == 0 or i + period * degree_h < 2:
            continue
        done += 1
        h = Poly.univariate(modulus, coeffs)
        g = Poly.univariate(modulus, {i + e * period: c for e, c in coeffs.items()})
        try:
            decomposition = unity_decompose(g)
        except DanielewskiError as e:
            result.fail(f"{g}: {e.variant}: {e}")
            continue
        if (decomposition.i, decomposition.s, decomposition.h) != (i, period, h):
            result.fail(f"{g}: 得到 {decomposition.describe()}")
        exponents = list(g.univariate_coeffs('X'))
        if _brute_force_period(exponents, decomposition.i) != decomposition.s:
            result.fail(f"{g}: s 不是最大的")
        if decomposition.reconstruct() != g:
            result.fail(f"{g}: 重构失败")
    return result


def root_of_unity_identity(rng: random.Random, trials: int = 1) -> SuiteResult:
    """f(λX) = λ^j·f(X)；两种 T(y) 约定在 Φ4 上都成立，在 Φ3 上只有 λ^(-j) 成立"""
    result = SuiteResult('root_of_unity_identity', trials)
    s = standard_surface(SIGMA1, modulus='t^2 + 1')
    lam = s.modulus.generator()
    X = Poly.var(s.modulus, 'X')
    if substitute(s.f, {'X': X.scale(lam)}) != s.f.scale(lam ** 2):
        result.fail("Φ4 上 f(tX) ≠ t^2·f(X)")
    T = make_T(s, lam)
    if T.ty != -s.y:
        result.fail(f"T(y) 应为 -y，实际为 {T.ty}")
    try:
        make_T(s, lam, TConvention.PRINTED)
    except RelationViolated:
        result.fail("Φ4 上 λ^j 约定应当通过校验")

    cubic = standard_surface({'f': 'X^4 - X', 'phi': 'Z^2'}, modulus='t^2 + t + 1')
    omega = cubic.modulus.generator()
    make_T(cubic, omega)
    try:
        make_T(cubic, omega, TConvention.PRINTED)
        result.fail("Φ3 上 λ^j 约定应当被拒绝")
    except RelationViolated:
        pass

    aperiodic = standard_surface({'f': 'X^3 + X + 1', 'phi': 'Z^2'})
    try:
        make_T(aperiodic, aperiodic.modulus.constant(-1))
        result.fail("s = 1 时只允许 λ = 1")
    except NotRootOfUnity:
        pass
    return result


def _random_tag(s: SurfaceSpec, rng: random.Random) -> GeneratorTag:
    family = rng.choice('HTRS')
    if family == 'H':
        return GeneratorTag('H', random_kx(s.modulus, rng, max_degree=3))
    if family == 'R':
        return GeneratorTag('R', s.poly(rng.choice(_R_PARAMETERS)).constant_value())
    return GeneratorTag(family, s.modulus.constant(rng.choice([1, -1])))


def automorphism_group(rng: random.Random, trials: int = 100) -> SuiteResult:
    """随机生成元序列保持关系、可逆并符合 αz + b(x) 形式；H 构成单参数子群"""
    result = SuiteResult('automorphism_group', trials)
    s = standard_surface(SIGMA0)
    for _ in range(trials):
        word = tuple(_random_tag(s, rng) for _ in range(rng.randint(1, 5)))
        M = build_word(s, word)
        if not relation_image(s, M.tx, M.ty, M.tz).is_zero():
            result.fail(f"关系未保持: {M}")
        if not morphism_equal(compose(M, invert(M)), identity(s)):
            result.fail(f"M∘M⁻¹ ≠ id: {M}")
        shape = automorphism_shape(M)
        if not shape.holds:
            result.fail(f"形式不符: {shape.violations}")
    for _ in range(max(trials // 2, 1)):
        h1 = random_kx(s.modulus, rng, max_degree=4)
        h2 = random_kx(s.modulus, rng, max_degree=4)
        if not morphism_equal(compose(make_H(s, h1), make_H(s, h2)), make_H(s, h1 + h2)):
            result.fail(f"H_h1∘H_h2 ≠ H_(h1+h2): h1={h1}, h2={h2}")
    return result


def filtration(rng: random.Random, trials: int = 100) -> SuiteResult:
    """f-进展开可重构；权在乘法下相加，首项形式可乘；嵌入是同态"""
    result = SuiteResult('filtration', trials)
    surfaces = [standard_surface(SIGMA0), standard_surface(SIGMA1)]
    assignments = [WeightAssignment(1, 1), WeightAssignment(1, 7), WeightAssignment(1, 101)]
    for n in range(trials):
        s = surfaces[n % 2]
        p = random_kx(s.modulus, rng, max_degree=20, nonzero=True)
        expansion = fadic_expand(s, p)
        if expansion.reconstruct(s.f) != p:
            result.fail(f"f-进展开重构失败: {p}")
        if any(digit.degree('X') > s.r - 1 for digit in expansion.digits.values()):
            result.fail(f"f-进数字次数超过 r-1: {p}")

        a = random_element(s, rng, max_terms=3, nonzero=True)
        b = random_element(s, rng, max_terms=3, nonzero=True)
        ea, eb, eab = embed_in_T(a), embed_in_T(b), embed_in_T(a * b)
        if eab != ea * eb:
            result.fail(f"嵌入不是同态: a={a}, b={b}")
        for w in assignments:
            if weight(eab, w) != weight(ea, w) + weight(eb, w):
                result.fail(f"权不可加 (μ={w.mu}, ν={w.nu}): a={a}, b={b}")
            # Gr 中首项形式的乘积即乘积的首项形式
            if leading_form(eab, w) != leading_form(leading_form(ea, w) * leading_form(eb, w), w):
                result.fail(f"首项形式不可乘 (μ={w.mu}, ν={w.nu}): a={a}, b={b}")
    return result


def normal_form(rng: random.Random, trials: int = 200) -> SuiteResult:
    """normalize(F) = 0，规范形与乘法相容，deg_Z < d 且幂等"""
    result = SuiteResult('normal_form', trials)
    surfaces = [standard_surface(SIGMA0), standard_surface(SIGMA1)]
    for s in surfaces:
        if not normalize(s, s.relation).is_zero():
            result.fail(f"normalize(F) ≠ 0: {s}")
    for n in range(trials):
        s = surfaces[n % 2]
        p = random_poly(s.modulus, rng, degrees=(4, 2, s.d + 2))
        q = random_poly(s.modulus, rng, degrees=(4, 2, s.d + 2))
        product = normalize(s, p * q)
        if product != normalize(s, p) * normalize(s, q):
            result.fail(f"normalize(pq) ≠ normalize(p)·normalize(q): p={p}, q={q}")
        if product.rep.degree('Z') >= s.d:
            result.fail(f"deg_Z ≥ d: {product}")
        if normalize(s, product.rep) != product:
            result.fail(f"normalize 不幂等: {product}")
    return result


SUITES: Dict[str, Callable[[random.Random, int], SuiteResult]] = {
    'canonical_nilpotency': canonical_nilpotency,
    'lnd_classifier': lnd_classifier,
    'kernel_theorem': kernel_theorem,
    'unity_decomposition': unity_decomposition,
    'root_of_unity_identity': root_of_unity_identity,
    'automorphism_group': automorphism_group,
    'filtration': filtration,
    'normal_form': normal_form,
}

DEFAULT_TRIALS = {
    'canonical_nilpotency': 20,
    'lnd_classifier': 50,
    'kernel_theorem': 200,
    'unity_decomposition': 100,
    'root_of_unity_identity': 1,
    'automorphism_group': 100,
    'filtration': 100,
    'normal_form': 200,
}
