"""
划分与指标集 - 其余模块共用的组合学内核

约定：划分按弱递减顺序存储（例如 (5,3,3,1)），空序列表示空划分。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from horn_codes.cache import memoize
from horn_codes.exception import ErrorType, HornCodesError, require

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """弱递减的正整数序列"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise HornCodesError(ErrorType.INPUT_ERROR, f"划分的部分必须为正整数: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise HornCodesError(ErrorType.INPUT_ERROR, f"划分必须弱递减: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> "Partition":
        """去掉末尾的零后构造"""
        values = list(values)
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """第 i 行长度（0 起），越界为 0"""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        """Young 图包含关系 other ⊆ self"""
        return other.length <= self.length and all(
            other.part(i) <= self.part(i) for i in range(other.length)
        )

    def stretched(self, factor: int) -> "Partition":
        return Partition(tuple(factor * p for p in self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "[]"


EMPTY = Partition()


@dataclass(frozen=True)
class IndexSet:
    """{1..n} 的严格递增子集"""

    elements: Tuple[int, ...]
    ambient: int

    def __post_init__(self) -> None:
        elements = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise HornCodesError(ErrorType.INPUT_ERROR, f"指标集必须严格递增: {elements}")
        if elements and (elements[0] < 1 or elements[-1] > self.ambient):
            raise HornCodesError(
                ErrorType.INPUT_ERROR,
                f"指标集超出范围 {{1..{self.ambient}}}: {elements}",
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, position: int) -> int:
        return self.elements[position]

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def _partitions_bounded(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@memoize
def _partitions_tuple(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


def partitions_of(n: int) -> List[Partition]:
    """n 的全部划分，按字典序递减排列，例如 (4),(3,1),(2,2),(2,1,1),(1,1,1,1)"""
    require(n >= 0, ErrorType.INPUT_ERROR, f"n 必须非负: {n}", n=n)
    return list(_partitions_tuple(n))


def partition_count(n: int) -> int:
    """动态规划计数 p(n)，与枚举互为独立校验"""
    require(n >= 0, ErrorType.INPUT_ERROR, f"n 必须非负: {n}", n=n)
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            counts[total] += counts[total - part]
    return counts[n]


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return Partition(tuple(sum(1 for row in p.parts if row > i) for i in range(p.parts[0])))


def dominates(a: Partition, b: Partition) -> bool:
    """优势序 a ⊵ b（要求同大小）"""
    if a.size != b.size:
        return False
    length = max(a.length, b.length)
    total_a = total_b = 0
    for i in range(length):
        total_a += a.part(i)
        total_b += b.part(i)
        if total_a < total_b:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power_decomposition(q: int) -> Tuple[int, int]:
    """q = p^k，返回 (p, k)；q 不是素数幂时报错"""
    require(q >= 2, ErrorType.INPUT_ERROR, f"q 必须 >= 2: {q}", q=q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    require(rest == 1, ErrorType.INPUT_ERROR, f"q 不是素数幂: {q}", q=q)
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power_decomposition(q)
    except HornCodesError:
        return False
    return True


def q_binomial(n: int, r: int, q: int) -> int:
    """
    Gauss 二项式：F_q^{n+1} 中 (r+1) 维子空间的个数

    l = (q^{n+1}-1)(q^{n+1}-q)...(q^{n+1}-q^r) / (q^{r+1}-1)(q^{r+1}-q)...(q^{r+1}-q^r)
    """
    require(0 <= r <= n, ErrorType.INPUT_ERROR, f"要求 0 <= r <= n: (n, r) = ({n}, {r})", n=n, r=r)
    require(q >= 2, ErrorType.INPUT_ERROR, f"q 必须 >= 2: {q}", q=q)
    require(is_prime_power(q), ErrorType.INPUT_ERROR, f"q 不是素数幂: {q}", q=q)
    numerator = denominator = 1
    for i in range(r + 1):
        numerator *= q ** (n + 1) - q**i
        denominator *= q ** (r + 1) - q**i
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise HornCodesError(
            ErrorType.INVARIANT_FAILURE,
            "Gauss 二项式不能整除",
            {"n": n, "r": r, "q": q},
        )
    return value


def partition_from_index_set(index_set: IndexSet, r: int) -> Partition:
    """I = {i_1 < ... < i_r} 对应 λ = (i_r - r, ..., i_1 - 1)，去掉末尾零"""
    require(
        len(index_set) == r,
        ErrorType.INPUT_ERROR,
        f"指标集大小 {len(index_set)} 与 r = {r} 不符",
        index_set=str(index_set),
        r=r,
    )
    values = [index_set[j] - (j + 1) for j in reversed(range(r))]
    return Partition.from_sequence(values)


def hypersimplex_contains(c: Sequence, d: int, n: int) -> bool:
    """c ∈ Δ(d+1, n)：0 <= c_i <= 1 且 Σ c_i = d+1，精确有理运算"""
    require(len(c) == n, ErrorType.INPUT_ERROR, f"向量长度 {len(c)} 与 n = {n} 不符", n=n)
    values = [Fraction(v) for v in c]
    return all(0 <= v <= 1 for v in values) and sum(values, Fraction(0)) == d + 1
