import logging
import threading
import time
from typing import Any, Dict, Optional


class CheckMonitor:
    """记录每个检验套件的执行状态与历史，线程安全"""

    def __init__(self, max_history: int = 1000):
        self.logger = logging.getLogger(__name__)
        self.max_history = max_history
        self.check_history = []  # 已完成的检验
        self.check_status = {}  # 当前检验状态
        self.lock = threading.Lock()

    def start_check(self, check_id: str, check_name: str) -> None:
        """记录检验开始

        Args:
            check_id: 检验ID
            check_name: 检验名称
        """
        with self.lock:
            self.check_status[check_id] = {
                'check_id': check_id,
                'check_name': check_name,
                'status': 'running',
                'start_time': time.time(),
                'end_time': None,
                'duration': None,
                'success': None,
                'error': None,
                'details': {}
            }
            self.logger.info(f"检验开始: {check_name} ({check_id})")

    def complete_check(self, check_id: str, success: bool, error: Optional[str] = None,
                       details: Optional[Dict[str, Any]] = None) -> None:
        """记录检验完成

        Args:
            check_id: 检验ID
            success: 是否通过
            error: 失败原因
            details: 附加信息
        """
        with self.lock:
            if check_id not in self.check_status:
                self.logger.warning(f"未知的检验: {check_id}")
                return
            end_time = time.time()
            info = self.check_status[check_id]
            info['status'] = 'completed'
            info['end_time'] = end_time
            info['duration'] = end_time - info['start_time']
            info['success'] = success
            info['error'] = error
            if details:
                info['details'].update(details)

            self.check_history.append(info.copy())
            if len(self.check_history) > self.max_history:
                self.check_history.pop(0)

            if success:
                self.logger.info(f"检验通过: {info['check_name']}, 耗时: {info['duration']:.2f}秒")
            else:
                self.logger.error(f"检验失败: {info['check_name']}, 耗时: {info['duration']:.2f}秒, 原因: {error}")

    def get_statistics(self) -> Dict[str, int]:
        """
        Returns:
            执行、通过、失败与运行中的检验数
        """
        with self.lock:
            return {
                'total_executed': len(self.check_history),
                'success_count': sum(1 for c in self.check_history if c['success'] is True),
                'failed_count': sum(1 for c in self.check_history if c['success'] is False),
                'running_count': sum(1 for c in self.check_status.values() if c['status'] == 'running'),
            }