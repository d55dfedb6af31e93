"""日志配置"""
import logging
import sys

def setup_logging(debug: bool = False):
    """设置日志配置，日志写到 stderr，stdout 只留给命令输出"""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(logging.DEBUG if debug else logging.INFO)
