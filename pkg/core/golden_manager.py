"""
黄金文件管理器 - 统一加载、生成与比对附录三元组表
"""

import logging
from pathlib import Path
from typing import Dict, List, Tuple

from config import Config
from horn_codes.exception import ErrorType, HornCodesError
from horn_codes.horn_sets import IndexTriple, format_triple, parse_triple, t_set, u_set
from horn_codes.types import CheckResult

logger = logging.getLogger(__name__)

# 附录表中的 (n, r)
APPENDIX_CASES: List[Tuple[int, int]] = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]

# 表中印出的 "#=" 计数；(3, 2) 一行印 10 但只列出 6 个三元组
PRINTED_COUNTS: Dict[Tuple[str, int, int], int] = {
    ("U", 2, 1): 3, ("T", 2, 1): 3,
    ("U", 3, 1): 6, ("T", 3, 1): 6,
    ("U", 3, 2): 10, ("T", 3, 2): 10,
    ("U", 4, 1): 10, ("T", 4, 1): 10,
    ("U", 4, 2): 27, ("T", 4, 2): 21,
    ("U", 4, 3): 10, ("T", 4, 3): 10,
}

_BUILDERS = {"U": u_set, "T": t_set}


class GoldenManager:
    """统一黄金文件管理器"""

    def __init__(self, config: Config):
        self.config = config

    def load_triples(self, kind: str, n: int, r: int) -> List[IndexTriple]:
        """加载一个黄金文件"""
        path = self.config.get_golden_file(kind, n, r)
        try:
            lines = path.read_text(encoding='utf-8').splitlines()
        except OSError as e:
            raise HornCodesError(
                ErrorType.FILE_ERROR,
                f"加载黄金文件失败: {path}",
                {"error": str(e)}
            )
        return [parse_triple(line, n) for line in lines if line.strip()]

    def save_triples(self, kind: str, n: int, r: int, triples: List[IndexTriple]) -> Path:
        """保存一个黄金文件"""
        path = self.config.get_golden_file(kind, n, r)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("".join(f"{format_triple(t)}\n" for t in triples), encoding='utf-8')
        except OSError as e:
            raise HornCodesError(
                ErrorType.FILE_ERROR,
                f"保存黄金文件失败: {path}",
                {"error": str(e)}
            )
        logger.info(f"✅ 已保存: {path}")
        return path

    def compute(self, kind: str, n: int, r: int) -> List[IndexTriple]:
        return _BUILDERS[kind.upper()](n, r)

    def write_all(self) -> List[Path]:
        """按当前实现重新生成全部黄金文件"""
        return [
            self.save_triples(kind, n, r, self.compute(kind, n, r))
            for n, r in APPENDIX_CASES
            for kind in ("U", "T")
        ]

    def check_case(self, kind: str, n: int, r: int) -> CheckResult:
        """逐元素比对计算结果与黄金文件"""
        expected = sorted(self.load_triples(kind, n, r), key=IndexTriple.key)
        actual = sorted(self.compute(kind, n, r), key=IndexTriple.key)
        passed = expected == actual
        printed = PRINTED_COUNTS.get((kind.upper(), n, r))
        detail = f"#={len(actual)}"
        if printed is not None and printed != len(expected):
            logger.warning(
                f"⚠️ {kind}^{n}_{r}: 表中印出 #={printed}，实际列出 {len(expected)} 个三元组"
            )
            detail += f"（表中印出 #={printed}，列出 {len(expected)} 个）"
        if not passed:
            missing = [format_triple(t) for t in expected if t not in actual]
            extra = [format_triple(t) for t in actual if t not in expected]
            detail += f" 缺少 {missing} 多出 {extra}"
        return CheckResult(suite="appendix", name=f"{kind.upper()}_{n}_{r}", passed=passed, detail=detail)

    def check_all(self) -> List[CheckResult]:
        return [self.check_case(kind, n, r) for n, r in APPENDIX_CASES for kind in ("U", "T")]
