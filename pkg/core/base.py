"""
基础类定义 - 校验套件的公共部分
"""

import time
import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Tuple
from threading import Lock

from tqdm import tqdm

from config import Config
from horn_codes.cache import cache_size, clear_cache
from horn_codes.exception import HornCodesError
from horn_codes.types import CheckResult, SuiteReport

logger = logging.getLogger(__name__)

# 单项检查：返回 (是否通过, 说明)
CheckFn = Callable[[], Tuple[bool, str]]


class BaseSuite(ABC):
    """校验套件基类"""

    name: str = ""

    def __init__(self, config: Config, show_progress: bool = True):
        self.config = config
        self.show_progress = show_progress
        self.stats = {
            'total_passed': 0,
            'total_failed': 0,
            'start_time': None
        }
        self.stats_lock = Lock()

    def update_stats(self, passed: int = 0, failed: int = 0) -> None:
        """更新统计信息"""
        with self.stats_lock:
            self.stats['total_passed'] += passed
            self.stats['total_failed'] += failed

    def get_stats(self) -> Dict[str, Any]:
        """获取统计信息"""
        with self.stats_lock:
            elapsed = time.time() - (self.stats['start_time'] or time.time())
            total = self.stats['total_passed'] + self.stats['total_failed']
            return {
                **self.stats,
                'elapsed_time': elapsed,
                'pass_rate': self.stats['total_passed'] / total if total > 0 else 0,
            }

    @abstractmethod
    def checks(self) -> List[Tuple[str, CheckFn]]:
        """子类必须给出的检查列表"""
        pass

    def run_check(self, name: str, check: CheckFn) -> CheckResult:
        """执行单项检查；库抛出的错误记为失败"""
        try:
            passed, detail = check()
        except HornCodesError as e:
            passed, detail = False, str(e)
        self.update_stats(passed=int(passed), failed=int(not passed))
        return CheckResult(suite=self.name, name=name, passed=bool(passed), detail=detail)

    def run_batch(self, checks: List[Tuple[str, CheckFn]]) -> List[CheckResult]:
        """并发执行检查，结果按输入顺序返回"""
        results: List[CheckResult] = [None] * len(checks)
        with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
            with tqdm(total=len(checks), desc=f"校验 {self.name}", disable=not self.show_progress) as pbar:
                future_to_index = {
                    executor.submit(self.run_check, name, check): i
                    for i, (name, check) in enumerate(checks)
                }
                for future in as_completed(future_to_index):
                    results[future_to_index[future]] = future.result()
                    pbar.update(1)
        return results

    def run(self) -> SuiteReport:
        """运行套件"""
        logger.info(f"🚀 启动校验套件 {self.name}")
        self.stats['start_time'] = time.time()

        try:
            results = self.run_batch(self.checks())
        except Exception as e:
            logger.error(f"❌ 套件 {self.name} 执行失败: {str(e)}")
            raise
        finally:
            # 记忆化结果只在单个套件内有效
            logger.debug(f"清空缓存: {cache_size()} 项")
            clear_cache()

        stats = self.get_stats()
        report = SuiteReport(suite=self.name, checks=results, elapsed=stats['elapsed_time'])
        if report.passed:
            logger.info(f"✅ {self.name}: {stats['total_passed']} 项全部通过，用时{stats['elapsed_time']:.1f}s")
        else:
            logger.error(f"❌ {self.name}: 通过{stats['total_passed']}, 失败{stats['total_failed']}")
        return report
