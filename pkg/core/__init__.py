"""
horn-codes 应用层：校验套件与黄金文件
"""

from .base import BaseSuite
from .golden_manager import GoldenManager
from .verifier import AcceptanceVerifier, format_report

__all__ = [
    'BaseSuite',
    'GoldenManager',
    'AcceptanceVerifier',
    'format_report'
]
