"""
曲面与导子的JSON规格文件

曲面文件:  {"modulus": "t", "f": "X^2 - 1", "phi": "Z^2"}
导子文件:  {"dx": "0", "dy": "2*Z", "dz": "X^2 - 1"}
"""

import json
import logging
import os
from typing import Any, Dict, Optional

from algebra.field import FieldModulus
from algebra.parser import parse_modulus, parse_poly
from errors import ConfigError, ParseError
from surface.ring import SurfaceSpec, make_surface

logger = logging.getLogger(__name__)

DEFAULT_MODULUS = "t"


def _read_json(path: str) -> Dict[str, Any]:
    if not os.path.exists(path):
        raise ConfigError(f"规格文件不存在: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"规格文件解析错误 {path}: {e}")
        raise ParseError(f"规格文件不是合法的JSON: {path}: {e.msg}", e.lineno, e.colno)
    if not isinstance(data, dict):
        raise ParseError(f"规格文件必须是JSON对象: {path}")
    return data


def _require_string(data: Dict[str, Any], key: str, source: str) -> str:
    value = data.get(key)
    if not isinstance(value, str):
        raise ParseError(f"{source} 缺少字符串字段 '{key}'")
    return value


def surface_from_mapping(data: Dict[str, Any], modulus_override: Optional[str] = None,
                         source: str = "surface") -> SurfaceSpec:
    """
    由字典构造曲面

    Args:
        data: 含 modulus / f / phi 的字典
        modulus_override: 命令行指定的模多项式，优先于字典中的值
        source: 出错时报告的来源

    Returns:
        校验过的曲面
    """
    modulus_text = modulus_override or data.get('modulus') or DEFAULT_MODULUS
    modulus = parse_modulus(modulus_text)
    f = parse_poly(_require_string(data, 'f', source), modulus)
    phi = parse_poly(_require_string(data, 'phi', source), modulus)
    surface = make_surface(modulus, f, phi)
    logger.info(f"已加载曲面 {source}: m={modulus}, f={f}, φ={phi}, r={surface.r}, d={surface.d}")
    return surface


def load_surface(path: str, modulus_override: Optional[str] = None) -> SurfaceSpec:
    """从JSON文件加载曲面"""
    return surface_from_mapping(_read_json(path), modulus_override, source=path)


def load_derivation_spec(path: str) -> Dict[str, str]:
    """读取导子文件，返回 dx / dy / dz 三个多项式文本"""
    data = _read_json(path)
    return {key: _require_string(data, key, path) for key in ('dx', 'dy', 'dz')}


def modulus_from_text(text: Optional[str]) -> FieldModulus:
    return parse_modulus(text or DEFAULT_MODULUS)
