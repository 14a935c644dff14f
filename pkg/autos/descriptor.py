"""
生成元与生成元序列的文本语法

    H[h=<poly>]  T[lambda=<field-elt>]  R[lambda=<field-elt>]  S[mu=<field-elt>]  id
    序列以 ';' 分隔，g1;g2 表示 g1∘g2
"""

import re
from typing import Optional, Tuple

from algebra.parser import parse_field_element, parse_poly, relocate
from autos.generators import build_word
from autos.morphism import GeneratorTag, Morphism, Word
from errors import ParseError
from surface.ring import SurfaceSpec

_GENERATOR_RE = re.compile(r"^\s*([HTRS])\s*\[\s*(h|lambda|mu)\s*=(.*)\]\s*$", re.DOTALL)
_PARAMETER_NAMES = {'H': 'h', 'T': 'lambda', 'R': 'lambda', 'S': 'mu'}


def parse_generator(text: str, s: SurfaceSpec, word_text: Optional[str] = None, offset: int = 0) -> Word:
    """
    解析单个生成元；'id' 返回空记录

    Args:
        text: 生成元文本
        s: 曲面
        word_text: 所在的完整序列文本，参数的语法错误按其中的位置报告
        offset: text 在 word_text 中的字符偏移量
    """
    if text.strip() == 'id':
        return ()
    match = _GENERATOR_RE.match(text)
    if match is None:
        raise ParseError(f"无法识别的生成元: '{text.strip()}'")
    family, name, body = match.groups()
    if _PARAMETER_NAMES[family] != name:
        raise ParseError(f"生成元 {family} 的参数名应为 '{_PARAMETER_NAMES[family]}'，实际为 '{name}'")
    try:
        if family == 'H':
            parameter = parse_poly(body, s.modulus)
        else:
            parameter = parse_field_element(body, s.modulus)
    except ParseError as e:
        raise relocate(e, body, word_text or text, offset + match.start(3)) from None
    return (GeneratorTag(family, parameter),)


def parse_word(text: str, s: SurfaceSpec) -> Word:
    """解析 ';' 分隔的生成元序列"""
    parts = text.split(';')
    if not any(part.strip() for part in parts):
        raise ParseError("生成元序列为空")
    word: Tuple[GeneratorTag, ...] = ()
    offset = 0
    for part in parts:
        if not part.strip():
            raise ParseError(f"生成元序列中有空项: '{text}'")
        word += parse_generator(part, s, text, offset)
        offset += len(part) + 1
    return word


def morphism_from_text(text: str, s: SurfaceSpec) -> Morphism:
    return build_word(s, parse_word(text, s))
