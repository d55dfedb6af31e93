"""
线程安全的记忆化缓存

读穿透、同键去重：并发调用同一参数时只计算一次，其余调用等待结果。
缓存开关不改变任何返回值。
"""

import functools
import logging
import threading
from collections import defaultdict
from typing import Any, Callable, Dict, Hashable, Tuple, TypeVar

T = TypeVar("T")

logger = logging.getLogger(__name__)

USE_CACHE = True
_USE_CACHE_LOCK = threading.Lock()
cache: Dict[Hashable, Tuple[Any, threading.Event]] = {}
lock = threading.Lock()
conditions: Dict[Hashable, threading.Condition] = defaultdict(threading.Condition)


def disable_cache() -> None:
    global USE_CACHE
    with _USE_CACHE_LOCK:
        USE_CACHE = False


def enable_cache() -> None:
    global USE_CACHE
    with _USE_CACHE_LOCK:
        USE_CACHE = True


def clear_cache() -> None:
    with lock:
        cache.clear()
        conditions.clear()


def cache_size() -> int:
    with lock:
        return len(cache)


def call_key(func: Callable[..., Any], args: Tuple[Any, ...], kwargs: Dict[str, Any]) -> Hashable:
    # 参数本身作键（全部为不可变值），避免散列碰撞
    return (func.__module__, func.__qualname__, args, tuple(sorted(kwargs.items())))


def memoize(func: Callable[..., T]) -> Callable[..., T]:
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> T:
        if not USE_CACHE:
            return func(*args, **kwargs)
        key = call_key(func, args, kwargs)
        entry = cache.get(key)
        if entry is not None and entry[1].is_set():
            return entry[0]

        with lock:
            condition = conditions[key]
        with condition:
            entry = cache.get(key)
            if entry is not None and entry[1].is_set():
                return entry[0]
            logger.debug(f"缓存未命中: {func.__qualname__}{args}")
            result = func(*args, **kwargs)
            event = threading.Event()
            event.set()
            with lock:
                cache[key] = (result, event)
            return result

    return wrapper
