from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def map(
    func: Callable[[T], U],
    iterable: Sequence[T],
    max_concurrency: int | None = None,
    use_tqdm: bool = False,
) -> List[U]:
    """按输入顺序收集结果；并发与顺序执行结果逐位一致"""
    assert max_concurrency is None or max_concurrency > 0
    items = list(iterable)
    if max_concurrency == 1:
        if use_tqdm:
            from tqdm import tqdm

            return [func(item) for item in tqdm(items)]
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=max_concurrency) as executor:
        if use_tqdm:
            from tqdm import tqdm

            return list(tqdm(executor.map(func, items), total=len(items)))
        return list(executor.map(func, items))
