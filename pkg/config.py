"""
统一配置管理 - horn-codes 项目配置中心
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional
import os

@dataclass
class Config:
    """统一配置管理类"""

    # === 项目路径配置 ===
    root_dir: Path = Path(__file__).parent
    golden_override: Optional[Path] = None

    @property
    def golden_dir(self) -> Path:
        return self.golden_override or self.root_dir / "golden_files" / "appendix"

    # === 穷举与并发配置 ===
    exhaustion_bound: int = 10**6
    max_workers: int = 4
    seed: int = 10

    # === 随机校验的样本数 ===
    snf_samples: int = 200
    euclid_samples: int = 200
    horn_product_samples: int = 100
    local_degree_samples: int = 50

    # === 穷举校验的规模上限 ===
    horn_lr_max_n: int = 5
    lr_oracle_max_size: int = 5
    kronecker_max_n: int = 5
    orthogonality_max_n: int = 6

    def __post_init__(self):
        """初始化后处理"""
        # 从环境变量覆盖配置
        if bound := os.getenv("HORN_CODES_EXHAUSTION_BOUND"):
            self.exhaustion_bound = int(bound)
        if workers := os.getenv("HORN_CODES_MAX_WORKERS"):
            self.max_workers = int(workers)
        if seed := os.getenv("HORN_CODES_SEED"):
            self.seed = int(seed)
        if golden := os.getenv("HORN_CODES_GOLDEN_DIR"):
            self.golden_override = Path(golden)

    def get_golden_file(self, kind: str, n: int, r: int) -> Path:
        """获取黄金文件路径，例如 U_4_2.txt"""
        return self.golden_dir / f"{kind.upper()}_{n}_{r}.txt"

# 全局配置实例
config = Config()
