"""
多项式 / 域元素 / 模多项式的文本语法

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' INTEGER)?
    atom   := INTEGER | 'X' | 'Y' | 'Z' | 't' | '(' expr ')'

'/' 只允许除以非零有理常数，'^' 只接受非负整数字面量，空白无意义，变量区分大小写。
先在 Q[t,X,Y,Z] 中精确求值，再按 m(t) 约化为 K[X,Y,Z] 的多项式。
"""

import re
from typing import Dict, List, NamedTuple, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from algebra.field import FieldElement, FieldModulus, T_RING
from algebra.poly import Poly
from errors import ParseError, WrongVariables

PARSE_RING, _t, _X, _Y, _Z = ring("t,X,Y,Z", QQ)
_SYMBOLS = {'t': _t, 'X': _X, 'Y': _Y, 'Z': _Z}

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([XYZt])|([-+*/^()])|(\S))")

# '^' 接受的最大指数
MAX_EXPONENT = 1024


class Token(NamedTuple):
    kind: str  # number / name / op / end
    text: str
    line: int
    column: int


def _line_starts(text: str) -> List[int]:
    return [0] + [m.end() for m in re.finditer(r"\n", text)]


def locate(text: str, offset: int) -> Tuple[int, int]:
    """字符偏移量对应的行列号（从1开始）"""
    line_starts = _line_starts(text)
    line = sum(1 for start in line_starts if start <= offset)
    return line, offset - line_starts[line - 1] + 1


def tokenize(text: str) -> List[Token]:
    """切分词法单元，记录行列号（从1开始）"""
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            break
        number, name, op, bad = match.groups()
        start = match.start(match.lastindex) if match.lastindex else match.end()
        line, column = locate(text, start)
        if bad is not None:
            raise ParseError(f"无法识别的字符 '{bad}'", line, column)
        if number is not None:
            tokens.append(Token('number', number, line, column))
        elif name is not None:
            tokens.append(Token('name', name, line, column))
        elif op is not None:
            tokens.append(Token('op', op, line, column))
        position = match.end()
    line, column = locate(text, len(text))
    tokens.append(Token('end', '', line, column))
    return tokens


class _Parser:
    """递归下降求值器"""

    def __init__(self, text: str, max_exponent: int = MAX_EXPONENT):
        self.tokens = tokenize(text)
        self.index = 0
        self.max_exponent = max_exponent

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Token = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def parse(self) -> PolyElement:
        if self.current.kind == 'end':
            raise self._error("输入为空")
        value = self._expr()
        if self.current.kind != 'end':
            raise self._error(f"多余的输入 '{self.current.text}'")
        return value

    def _expr(self) -> PolyElement:
        value = self._term()
        while self.current.kind == 'op' and self.current.text in '+-':
            op = self._advance().text
            rhs = self._term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def _term(self) -> PolyElement:
        value = self._factor()
        while self.current.kind == 'op' and self.current.text in '*/':
            op_token = self._advance()
            rhs = self._factor()
            if op_token.text == '*':
                value = value * rhs
                continue
            if not rhs or not rhs.is_ground:
                raise self._error("只能除以非零有理常数", op_token)
            value = value * (QQ.one / rhs.const())
        return value

    def _factor(self) -> PolyElement:
        token = self.current
        if token.kind == 'op' and token.text in '+-':
            self._advance()
            value = self._factor()
            return -value if token.text == '-' else value
        base = self._atom()
        if self.current.kind == 'op' and self.current.text == '^':
            self._advance()
            exponent = self.current
            if exponent.kind != 'number':
                raise self._error("'^' 后必须是非负整数")
            if int(exponent.text) > self.max_exponent:
                raise self._error(f"指数 {exponent.text} 超过上限 {self.max_exponent}", exponent)
            self._advance()
            base = base ** int(exponent.text)
        return base

    def _atom(self) -> PolyElement:
        token = self._advance()
        if token.kind == 'number':
            return PARSE_RING(int(token.text))
        if token.kind == 'name':
            return _SYMBOLS[token.text]
        if token.kind == 'op' and token.text == '(':
            value = self._expr()
            if self.current.kind != 'op' or self.current.text != ')':
                raise self._error("缺少 ')'")
            self._advance()
            return value
        if token.kind == 'end':
            raise self._error("表达式意外结束", token)
        raise self._error(f"意外的符号 '{token.text}'", token)


def parse_raw(text: str, max_exponent: int = MAX_EXPONENT) -> PolyElement:
    """解析为 Q[t,X,Y,Z] 中未约化的多项式"""
    return _Parser(text, max_exponent).parse()


def raw_to_poly(raw: PolyElement, modulus: FieldModulus) -> Poly:
    """按 (eX, eY, eZ) 分组，每组的 t 多项式模 m(t) 约化"""
    grouped: Dict[tuple, dict] = {}
    for (et, ex, ey, ez), coeff in raw.items():
        grouped.setdefault((ex, ey, ez), {})[(et,)] = coeff
    terms = {
        monomial: FieldElement(modulus, T_RING.from_dict(t_terms))
        for monomial, t_terms in grouped.items()
    }
    return Poly(modulus, terms)


def parse_poly(text: str, modulus: FieldModulus, max_exponent: int = MAX_EXPONENT) -> Poly:
    """
    解析 K[X,Y,Z] 中的多项式

    Args:
        text: 多项式文本
        modulus: 基域模多项式
        max_exponent: '^' 接受的最大指数

    Returns:
        多项式

    Raises:
        ParseError: 语法错误或指数超过上限
    """
    return raw_to_poly(parse_raw(text, max_exponent), modulus)


def parse_field_element(text: str, modulus: FieldModulus) -> FieldElement:
    """解析域元素，只允许出现 t"""
    poly = parse_poly(text, modulus)
    if not poly.is_constant():
        token = next(tok for tok in tokenize(text) if tok.kind == 'name' and tok.text != 't')
        raise ParseError(f"域元素不能含有 {token.text}", token.line, token.column)
    return poly.constant_value()


def relocate(error: ParseError, fragment: str, text: str, offset: int) -> ParseError:
    """
    把 fragment 内的错误位置换算为 text 中的位置

    Args:
        error: 解析 fragment 时的错误
        fragment: text 中从 offset 开始的片段
        text: 完整文本
        offset: fragment 在 text 中的字符偏移量
    """
    if error.line is None:
        return error
    inner = _line_starts(fragment)[error.line - 1] + error.column - 1
    return ParseError(error.reason, *locate(text, offset + inner))


def parse_modulus(text: str) -> FieldModulus:
    """
    解析模多项式 m(t)

    Raises:
        ParseError: 语法错误
        WrongVariables: 含有 X, Y, Z
        NotMonic / DegreeTooSmall: 不是首一或次数 < 1
    """
    raw = parse_raw(text)
    if any(ex or ey or ez for (_, ex, ey, ez) in raw.itermonoms()):
        raise WrongVariables(f"模多项式只能含有 t: {text}")
    return FieldModulus(T_RING.from_dict({(et,): c for (et, _, _, _), c in raw.items()}))
