"""
异常定义 - 全库统一的错误类型
"""

from enum import Enum
from typing import Any, Dict, Optional


class ErrorType(Enum):
    """错误类型枚举"""
    INPUT_ERROR = "输入不合法"
    FIELD_MISMATCH = "有限域不一致"
    ZERO_DIVISION = "除数为零"
    DIMENSION_MISMATCH = "维数不一致"
    SINGULAR_MATRIX = "矩阵奇异"
    POLE_AT_POINT = "求值点为极点"
    SUPPORT_COLLISION = "求值点落在除子支撑上"
    DIVISIBILITY_ERROR = "整除条件不满足"
    EXHAUSTION_LIMIT = "穷举规模超出上限"
    INVARIANT_FAILURE = "内部不变量失效"
    FILE_ERROR = "文件操作失败"


class HornCodesError(Exception):
    """自定义异常类"""

    def __init__(self, error_type: ErrorType, message: str, context: Optional[Dict[str, Any]] = None):
        self.error_type = error_type
        self.short_message = message
        self.context = context or {}
        super().__init__(f"{error_type.value}: {message}")


def require(condition: bool, error_type: ErrorType, message: str, **context: Any) -> None:
    if not condition:
        raise HornCodesError(error_type, message, context)
