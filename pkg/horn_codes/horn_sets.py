"""
Horn 指标三元组集合 U^n_r 与 T^n_r

U^n_r：Σ_{i∈I} i + Σ_{j∈J} j = Σ_{k∈K} k + r(r+1)/2
T^n_r：U^n_r 中对所有 p < r 与 (F,G,H) ∈ T^r_p 满足
       Σ_{f∈F} i_f + Σ_{g∈G} j_g <= Σ_{h∈H} k_h + p(p+1)/2 的三元组
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from horn_codes.cache import memoize
from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.func_tools import map as parallel_map
from horn_codes.partitions import IndexSet, partition_from_index_set
from horn_codes.symmetric_functions import lr_coefficient
from horn_codes.types import HornLREntry, HornLRReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexTriple:
    I: IndexSet
    J: IndexSet
    K: IndexSet

    def __post_init__(self) -> None:
        require(
            len(self.I) == len(self.J) == len(self.K),
            ErrorType.INPUT_ERROR,
            f"三个指标集大小不同: {self.I}, {self.J}, {self.K}",
        )
        require(
            self.I.ambient == self.J.ambient == self.K.ambient,
            ErrorType.INPUT_ERROR,
            "三个指标集的 n 不同",
        )

    @classmethod
    def of(cls, n: int, I, J, K) -> "IndexTriple":
        return cls(IndexSet(tuple(I), n), IndexSet(tuple(J), n), IndexSet(tuple(K), n))

    @property
    def r(self) -> int:
        return len(self.I)

    @property
    def n(self) -> int:
        return self.I.ambient

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return (self.I.elements, self.J.elements, self.K.elements)

    def __str__(self) -> str:
        return format_triple(self)


def format_triple(triple: IndexTriple) -> str:
    return f"{triple.I}|{triple.J}|{triple.K}"


_TRIPLE = re.compile(r"^\{([\d,\s]*)\}\|\{([\d,\s]*)\}\|\{([\d,\s]*)\}$")


def parse_triple(text: str, n: int) -> IndexTriple:
    """"{1,2}|{1,3}|{1,3}" → IndexTriple"""
    match = _TRIPLE.match(text.strip().replace(" ", ""))
    if not match:
        raise HornCodesError(ErrorType.INPUT_ERROR, f"无法解析三元组: {text!r}", {"text": text})
    parts = [tuple(int(v) for v in group.split(",") if v) for group in match.groups()]
    return IndexTriple.of(n, *parts)


def _check_range(n: int, r: int) -> None:
    require(1 <= r < n, ErrorType.INPUT_ERROR, f"要求 1 <= r < n: (n, r) = ({n}, {r})", n=n, r=r)


@memoize
def _u_set(n: int, r: int) -> Tuple[IndexTriple, ...]:
    subsets = list(itertools.combinations(range(1, n + 1), r))
    shift = r * (r + 1) // 2
    triples = []
    for I in subsets:
        for J in subsets:
            target = sum(I) + sum(J) - shift
            for K in subsets:
                if sum(K) == target:
                    triples.append(IndexTriple.of(n, I, J, K))
    triples.sort(key=IndexTriple.key)
    logger.debug(f"U^{n}_{r}: {len(triples)} 个三元组")
    return tuple(triples)


def u_set(n: int, r: int) -> List[IndexTriple]:
    _check_range(n, r)
    return list(_u_set(n, r))


def _passes(triple: IndexTriple, p: int, sub_triples: Tuple[IndexTriple, ...]) -> bool:
    # F 取 I 的第 f 个元素（从 1 起）
    I, J, K = triple.I, triple.J, triple.K
    bound = p * (p + 1) // 2
    for sub in sub_triples:
        left = sum(I[f - 1] for f in sub.I) + sum(J[g - 1] for g in sub.J)
        right = sum(K[h - 1] for h in sub.K) + bound
        if left > right:
            return False
    return True


@memoize
def _t_set(n: int, r: int) -> Tuple[IndexTriple, ...]:
    if r == 1:
        return _u_set(n, r)
    filters = [(p, _t_set(r, p)) for p in range(1, r)]
    kept = tuple(
        triple for triple in _u_set(n, r) if all(_passes(triple, p, subs) for p, subs in filters)
    )
    logger.debug(f"T^{n}_{r}: {len(kept)} 个三元组")
    return kept


def t_set(n: int, r: int) -> List[IndexTriple]:
    _check_range(n, r)
    return list(_t_set(n, r))


def triple_partitions(triple: IndexTriple):
    r = triple.r
    return (
        partition_from_index_set(triple.I, r),
        partition_from_index_set(triple.J, r),
        partition_from_index_set(triple.K, r),
    )


def horn_lr_consistency(n: int, r: int, max_concurrency: Optional[int] = 1) -> HornLRReport:
    """U^n_r 中每个三元组的 c^{ν(K)}_{λ(I)μ(J)}，按是否属于 T^n_r 分组"""
    _check_range(n, r)
    members = set(_t_set(n, r))

    def entry(triple: IndexTriple) -> HornLREntry:
        lam, mu, nu = triple_partitions(triple)
        return HornLREntry(
            triple=format_triple(triple),
            lam=str(lam),
            mu=str(mu),
            nu=str(nu),
            coefficient=lr_coefficient(lam, mu, nu),
            in_t=triple in members,
        )

    entries = parallel_map(entry, _u_set(n, r), max_concurrency=max_concurrency)
    return HornLRReport(
        n=n,
        r=r,
        t_entries=[e for e in entries if e.in_t],
        complement_entries=[e for e in entries if not e.in_t],
    )
