from typing import Callable, Iterable, List, TypeVar

from horn_codes.func_tools.map import map

T = TypeVar("T")

builtin_filter = filter


def filter(
    func: Callable[[T], bool],
    iterable: Iterable[T],
    max_concurrency: int | None = None,
) -> List[T]:
    assert max_concurrency is None or max_concurrency > 0
    items = list(iterable)
    bits = map(func, items, max_concurrency=max_concurrency)
    return [x for x, y in zip(items, bits) if y]
