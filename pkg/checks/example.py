"""
内置算例：在 f = X^22 + 2X^18 + X^10 - 2X^2, φ = Z^3 + Z + 1 上构造 H_{x^2+1}，
与冻结的规范形比对。关系残差 f(x)·H(y) - φ(H(z)) = 0 是权威判据；
H(y) 的参考印出形式仅作比对，差异只报告不判失败。
"""

import logging
import time
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from algebra.poly import Poly
from autos.generators import make_H
from autos.morphism import relation_image
from autos.unity import unity_decompose
from errors import ConfigError
from surface.loader import surface_from_mapping
from surface.ring import normalize

logger = logging.getLogger(__name__)

GOLDEN_PATH = Path(__file__).parent / 'goldens' / 'example.yaml'


def load_goldens(path: Optional[Path] = None) -> Dict[str, Any]:
    path = Path(path or GOLDEN_PATH)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"读取算例数据失败 {path}: {e}")
        raise ConfigError(f"读取算例数据失败: {e}")


def _difference_terms(actual: Poly, expected: Poly) -> int:
    return len(actual - expected)


def run_example_check(golden_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    重现算例

    Returns:
        报告字典，status 为 PASS 或 FAIL
    """
    started = time.time()
    goldens = load_goldens(golden_path)
    s = surface_from_mapping(goldens['surface'], source='example')
    h = s.poly(goldens['h'])
    H = make_H(s, h)

    failures = []
    decomposition = unity_decompose(s.f)
    expected_dec = goldens['unity_decomposition']
    if (decomposition.i, decomposition.s, decomposition.h) != (
            expected_dec['i'], expected_dec['s'], s.poly(expected_dec['h'])):
        failures.append('unity_decomposition')

    shift = H.tz.rep - Poly.var(s.modulus, 'Z')
    if shift != s.poly(goldens['h_z_shift']):
        failures.append('h_z')

    expected_y = normalize(s, s.poly(goldens['h_y'])).rep
    if H.ty.rep != expected_y:
        failures.append('h_y')

    residue = relation_image(s, H.tx, H.ty, H.tz)
    if not residue.is_zero():
        failures.append('relation_residue')

    printed = normalize(s, s.poly(goldens['printed_h_y'])).rep
    printed_mismatch = _difference_terms(H.ty.rep, printed)
    if printed_mismatch:
        logger.warning(f"印出的 H(y) 与计算结果有 {printed_mismatch} 项不同")

    elapsed = time.time() - started
    report = {
        'status': 'PASS' if not failures else 'FAIL',
        'failures': ','.join(failures) if failures else 'none',
        'unity_decomposition': f"i={decomposition.i}, s={decomposition.s}, h={decomposition.h}",
        'h_x': str(H.tx),
        'h_z': str(H.tz),
        'h_y': str(H.ty),
        'relation_residue': str(residue),
        'printed_h_y': 'match' if not printed_mismatch else f'differs in {printed_mismatch} terms',
    }
    logger.info(f"算例检验 {report['status']}，耗时 {elapsed:.2f}秒")
    return report
