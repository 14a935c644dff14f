import concurrent.futures
import logging
import random
import uuid
from typing import Dict, Iterable, List, Optional

from checks.monitor import CheckMonitor
from checks.suites import DEFAULT_TRIALS, SUITES, SuiteResult
from errors import ConfigError, DanielewskiError


class SuiteRunner:
    """
    按配置顺序或并发地执行性质检验套件
    """

    def __init__(self, thread_pool_size: int = 0, seed: int = 0,
                 trials: Optional[Dict[str, int]] = None, monitor: Optional[CheckMonitor] = None):
        """
        初始化

        Args:
            thread_pool_size: 0表示顺序执行，-1表示不限制线程数，>0表示具体线程数
            seed: 随机种子，每个套件由 (seed, 套件名) 派生各自的随机数发生器
            trials: 各套件的试验次数覆盖
            monitor: 检验监控器（可选）
        """
        self.logger = logging.getLogger(__name__)
        self.thread_pool_size = thread_pool_size
        self.seed = seed
        self.trials = dict(DEFAULT_TRIALS)
        self.trials.update(trials or {})
        self.monitor = monitor or CheckMonitor()

    def _run_suite(self, name: str) -> SuiteResult:
        check_id = str(uuid.uuid4())
        self.monitor.start_check(check_id, name)
        rng = random.Random(f"{self.seed}:{name}")
        try:
            result = SUITES[name](rng, self.trials[name])
        except DanielewskiError as e:
            self.monitor.complete_check(check_id, False, error=f"{e.variant}: {e}")
            result = SuiteResult(name, self.trials[name])
            result.fail(f"{e.variant}: {e}")
            return result
        except Exception as e:
            self.monitor.complete_check(check_id, False, error=str(e))
            raise
        self.monitor.complete_check(
            check_id, result.passed,
            error=None if result.passed else f"{result.violations} 处违例",
            details={'trials': result.trials, 'violations': result.violations},
        )
        return result

    def run(self, names: Optional[Iterable[str]] = None) -> List[SuiteResult]:
        """
        执行套件，结果按请求顺序返回

        Raises:
            ConfigError: 未知的套件名
        """
        names = list(names) if names else list(SUITES)
        unknown = [name for name in names if name not in SUITES]
        if unknown:
            raise ConfigError(f"未知的检验套件: {', '.join(unknown)}")

        self.logger.info(f"开始执行 {len(names)} 个检验套件，thread_pool_size={self.thread_pool_size}")
        if self.thread_pool_size == 0:
            return [self._run_suite(name) for name in names]

        max_workers = None if self.thread_pool_size == -1 else self.thread_pool_size
        results: Dict[str, SuiteResult] = {}
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
            futures = {executor.submit(self._run_suite, name): name for name in names}
            for future in concurrent.futures.as_completed(futures):
                results[futures[future]] = future.result()
        return [results[name] for name in names]
