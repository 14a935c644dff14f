#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
广义 Danielewski 曲面工具包
在 B = K[X,Y,Z]/(f(X)Y - φ(X,Z)) 上计算规范形、局部幂零导子及其分类、
ML / HD 不变量、自同构群的生成元以及权滤过
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from algebra.parser import parse_poly
from autos.descriptor import morphism_from_text
from autos.morphism import apply_morphism, automorphism_shape, invert, morphism_equal
from autos.unity import center, unity_decompose
from checks.example import run_example_check
from checks.runner import SuiteRunner
from checks.suites import SUITES
from config.config_manager import ConfigManager
from config.logging_config import LoggingConfig
from errors import DanielewskiError, ParseError
from filtration.fadic import fadic_expand
from filtration.weights import WeightAssignment, embed_in_T, leading_form, weight
from lnd.classifier import classify_lnd, invariants_report, kernel_member
from lnd.derivation import Derivation, apply, canonical_D, make_derivation, nilpotency_index
from surface.loader import load_derivation_spec, load_surface, surface_from_mapping
from surface.ring import BElement, SurfaceSpec

Result = Dict[str, Any]


class DanielewskiToolkit:
    """
    命令行各子命令的实现
    """

    def __init__(self, config_path: Optional[str] = None, surface_path: Optional[str] = None,
                 modulus: Optional[str] = None, cap: Optional[int] = None, output: Optional[str] = None):
        """
        初始化工具包

        Args:
            config_path: 配置文件路径（可选）
            surface_path: 曲面规格文件，优先于配置文件
            modulus: 基域模多项式，优先于曲面文件中的值
            cap: 幂零指数迭代上限，优先于环境变量与配置文件
            output: 输出格式 text / json
        """
        # 先加载配置，然后再设置日志
        if config_path is None:
            self.config_manager = ConfigManager()
        else:
            self.config_manager = ConfigManager(config_path)
        LoggingConfig.setup_logging(self.config_manager.get_logging_config())
        self.logger = logging.getLogger(__name__)

        self.output_format = output or self.config_manager.get_output_format()
        self.cap = self.config_manager.get_nilpotency_cap(cap)
        self.surface_path = surface_path
        self.modulus_override = modulus
        self._surface: Optional[SurfaceSpec] = None

    @property
    def surface(self) -> SurfaceSpec:
        """按需加载曲面：--surface > surface.file > 内联定义"""
        if self._surface is None:
            surface_config = self.config_manager.get_surface_config()
            path = self.surface_path or self.config_manager.get_surface_file()
            if path:
                self._surface = load_surface(path, self.modulus_override)
            else:
                self._surface = surface_from_mapping(surface_config, self.modulus_override, source='config')
        return self._surface

    def element(self, text: str) -> BElement:
        return self.surface.parse(text)

    def _derivation(self, spec_path: Optional[str]) -> Derivation:
        if not spec_path:
            return canonical_D(self.surface)
        images = load_derivation_spec(spec_path)
        s = self.surface
        return make_derivation(s, s.parse(images['dx']), s.parse(images['dy']), s.parse(images['dz']))

    def normalize(self, text: str) -> Result:
        return {'normal_form': str(self.element(text))}

    def evaluate(self, text: str) -> Result:
        """求值并判断结果是否落在 K[x] 中"""
        value = self.element(text)
        kx = value.in_kx()
        return {'value': str(value), 'in_kx': None if kx is None else str(kx)}

    def derive(self, text: str, spec_path: Optional[str] = None) -> Result:
        return {'derivative': str(apply(self._derivation(spec_path), self.element(text)))}

    def classify(self, spec_path: str) -> Result:
        return classify_lnd(self._derivation(spec_path)).describe()

    def nilpotency(self, text: str, spec_path: Optional[str] = None) -> Result:
        index = nilpotency_index(self._derivation(spec_path), self.element(text), self.cap)
        return {'index': index, 'cap': self.cap}

    def kernel(self, text: str, spec_path: Optional[str] = None) -> Result:
        return {'kernel_member': kernel_member(self._derivation(spec_path), self.element(text))}

    def invariants(self) -> Result:
        report_config = self.config_manager.get_report_config()
        return invariants_report(self.surface, report_config.get('sample_size', 50), report_config.get('seed', 0))

    def auto_make(self, descriptor: str) -> Result:
        return morphism_from_text(descriptor, self.surface).describe()

    def auto_apply(self, word: str, text: str) -> Result:
        return {'image': str(apply_morphism(morphism_from_text(word, self.surface), self.element(text)))}

    def auto_compose(self, word: str) -> Result:
        return morphism_from_text(word, self.surface).describe()

    def auto_invert(self, word: str) -> Result:
        return invert(morphism_from_text(word, self.surface)).describe()

    def auto_equal(self, first: str, second: str) -> Result:
        a = morphism_from_text(first, self.surface)
        b = morphism_from_text(second, self.surface)
        return {'equal': morphism_equal(a, b)}

    def auto_shape(self, word: str) -> Result:
        return automorphism_shape(morphism_from_text(word, self.surface)).describe()

    def decompose_unity(self, text: str) -> Result:
        return unity_decompose(parse_poly(text, self.surface.modulus)).describe()

    def center(self) -> Result:
        centered, (a, b) = center(self.surface)
        return {'f': str(centered.f), 'phi': str(centered.phi), 'a': str(a), 'b': str(b)}

    def fadic(self, text: str) -> Result:
        return fadic_expand(self.surface, parse_poly(text, self.surface.modulus)).describe()

    def weight(self, mu: int, nu: int, text: str) -> Result:
        return {'weight': weight(embed_in_T(self.element(text)), WeightAssignment(mu, nu))}

    def leading(self, mu: int, nu: int, text: str) -> Result:
        return {'leading_form': str(leading_form(embed_in_T(self.element(text)), WeightAssignment(mu, nu)))}

    def example_check(self) -> Result:
        return run_example_check()

    def verify(self, suites: Optional[List[str]] = None) -> Result:
        verify_config = self.config_manager.get_verify_config()
        runner = SuiteRunner(
            thread_pool_size=verify_config.get('thread_pool_size', 0),
            seed=verify_config.get('seed', 0),
            trials=verify_config.get('trials') or {},
        )
        results = runner.run(suites)
        summary: Result = {
            r.name: f"{'PASS' if r.passed else 'FAIL'} trials={r.trials} violations={r.violations}"
            for r in results
        }
        for r in results:
            for detail in r.details:
                self.logger.warning(f"{r.name}: {detail}")
        stats = runner.monitor.get_statistics()
        summary['executed'] = stats['total_executed']
        summary['passed'] = stats['success_count']
        summary['failed'] = stats['failed_count']
        summary['status'] = 'PASS' if all(r.passed for r in results) else 'FAIL'
        return summary


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return 'none'
    if isinstance(value, (list, tuple)):
        return '; '.join(str(v) for v in value) if value else 'none'
    return str(value)


def render(result: Result, output_format: str) -> str:
    """text 模式下单字段输出裸值，多字段输出 key: value 行"""
    if output_format == 'json':
        return json.dumps(result, ensure_ascii=False, indent=2)
    if len(result) == 1:
        return _format_value(next(iter(result.values())))
    return '\n'.join(f"{key}: {_format_value(value)}" for key, value in result.items())


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    解析命令行参数

    Returns:
        解析后的参数对象
    """
    parser = argparse.ArgumentParser(description="广义 Danielewski 曲面工具包")
    parser.add_argument('-c', '--config', help="配置文件路径")
    parser.add_argument('--surface', help="曲面规格JSON文件")
    parser.add_argument('--modulus', help="基域模多项式 m(t)，默认 t 即 K = Q")
    parser.add_argument('--cap', type=int, help="幂零指数迭代上限")
    parser.add_argument('--output', choices=['text', 'json'], help="输出格式")

    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('normalize', help="B 中的规范形").add_argument('poly')
    commands.add_parser('eval', help="在 B 中求值并判断是否属于 K[x]").add_argument('expr')

    derive = commands.add_parser('derive', help="计算导子的像")
    source = derive.add_mutually_exclusive_group()
    source.add_argument('--canonical', action='store_true', help="使用 𝒟（默认）")
    source.add_argument('--spec', help="导子规格JSON文件")
    derive.add_argument('elem')

    commands.add_parser('classify-lnd', help="局部幂零导子分类").add_argument('file')

    for name, description in (('nilpotency', "幂零指数"), ('kernel', "核成员判定")):
        sub = commands.add_parser(name, help=description)
        sub.add_argument('--spec', help="导子规格JSON文件，默认 𝒟")
        sub.add_argument('elem')

    commands.add_parser('invariants', help="ML / HD 不变量报告")

    auto = commands.add_parser('auto', help="自同构")
    auto_commands = auto.add_subparsers(dest='auto_command', required=True)
    auto_commands.add_parser('make').add_argument('descriptor')
    auto_apply = auto_commands.add_parser('apply')
    auto_apply.add_argument('word')
    auto_apply.add_argument('elem')
    auto_commands.add_parser('compose').add_argument('word')
    auto_commands.add_parser('invert').add_argument('word')
    auto_equal = auto_commands.add_parser('equal')
    auto_equal.add_argument('first')
    auto_equal.add_argument('second')
    auto_commands.add_parser('shape').add_argument('word')

    commands.add_parser('decompose-unity', help="X^i·h(X^s) 分解").add_argument('poly')
    commands.add_parser('center', help="中心化曲面")
    commands.add_parser('fadic', help="f-进展开").add_argument('poly')

    for name, description in (('weight', "权"), ('leading', "首项形式")):
        sub = commands.add_parser(name, help=description)
        sub.add_argument('--mu', type=int, required=True)
        sub.add_argument('--nu', type=int, required=True)
        sub.add_argument('elem')

    commands.add_parser('example-check', help="重现内置算例")

    verify = commands.add_parser('verify', help="执行性质检验套件")
    verify.add_argument('--suite', action='append', choices=sorted(SUITES), help="只执行指定套件，可重复")

    return parser.parse_args(argv)


def _dispatch(toolkit: DanielewskiToolkit, args: argparse.Namespace) -> Result:
    command = args.command
    if command == 'normalize':
        return toolkit.normalize(args.poly)
    if command == 'eval':
        return toolkit.evaluate(args.expr)
    if command == 'derive':
        return toolkit.derive(args.elem, args.spec)
    if command == 'classify-lnd':
        return toolkit.classify(args.file)
    if command == 'nilpotency':
        return toolkit.nilpotency(args.elem, args.spec)
    if command == 'kernel':
        return toolkit.kernel(args.elem, args.spec)
    if command == 'invariants':
        return toolkit.invariants()
    if command == 'auto':
        sub = args.auto_command
        if sub == 'make':
            return toolkit.auto_make(args.descriptor)
        if sub == 'apply':
            return toolkit.auto_apply(args.word, args.elem)
        if sub == 'compose':
            return toolkit.auto_compose(args.word)
        if sub == 'invert':
            return toolkit.auto_invert(args.word)
        if sub == 'equal':
            return toolkit.auto_equal(args.first, args.second)
        return toolkit.auto_shape(args.word)
    if command == 'decompose-unity':
        return toolkit.decompose_unity(args.poly)
    if command == 'center':
        return toolkit.center()
    if command == 'fadic':
        return toolkit.fadic(args.poly)
    if command == 'weight':
        return toolkit.weight(args.mu, args.nu, args.elem)
    if command == 'leading':
        return toolkit.leading(args.mu, args.nu, args.elem)
    if command == 'example-check':
        return toolkit.example_check()
    return toolkit.verify(args.suite)


def _report_error(error: DanielewskiError, output_format: str) -> None:
    if output_format == 'json':
        print(json.dumps({'error': error.variant, 'message': str(error)}, ensure_ascii=False, indent=2))
    else:
        print(f"{error.variant}: {error}", file=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Returns:
        退出码：0 成功；1 领域错误或检验失败；2 语法 / 用法错误
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    output_format = args.output or 'text'
    try:
        toolkit = DanielewskiToolkit(args.config, args.surface, args.modulus, args.cap, args.output)
        output_format = toolkit.output_format
        result = _dispatch(toolkit, args)
    except ParseError as e:
        _report_error(e, output_format)
        return 2
    except DanielewskiError as e:
        logging.getLogger(__name__).debug(f"命令失败: {e.variant}: {e}")
        _report_error(e, output_format)
        return 1

    print(render(result, output_format))
    return 1 if result.get('status') == 'FAIL' else 0


def main():
    """
    主函数
    """
    try:
        sys.exit(run(sys.argv[1:]))
    except Exception as e:
        LoggingConfig.log_error(e, "程序运行失败")
        sys.exit(1)


if __name__ == '__main__':
    main()
