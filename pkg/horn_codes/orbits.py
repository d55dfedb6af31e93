"""
轨道构造：子空间在矩阵群右乘下的轨道（轨道码），以及点配置在置换群下的轨道
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, List, Sequence, Set, Tuple

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.linalg import Matrix, identity, is_invertible, mat_mul, rank, rref

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subspace:
    """以行最简形基表示的 F_q^n 子空间"""

    field: FieldSpec
    ambient: int
    basis: Tuple[Tuple[FieldElement, ...], ...]

    @classmethod
    def span(cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement]], ambient: int = None) -> "Subspace":
        rows = [[field.element(v) for v in row] for row in rows]
        if ambient is None:
            require(len(rows) > 0, ErrorType.INPUT_ERROR, "空生成组需要给出 ambient")
            ambient = len(rows[0])
        require(
            all(len(row) == ambient for row in rows),
            ErrorType.DIMENSION_MISMATCH,
            f"生成向量长度应为 {ambient}",
        )
        reduced, pivots = rref(rows)
        return cls(field, ambient, tuple(tuple(reduced[i]) for i in range(len(pivots))))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(v.index for v in row) for row in self.basis)

    def __str__(self) -> str:
        from horn_codes.formats import format_field_element

        rows = ["[" + " ".join(format_field_element(v) for v in row) + "]" for row in self.basis]
        return "<" + ", ".join(rows) + ">"


def general_linear_generators(field: FieldSpec, n: int) -> List[Matrix]:
    """GL(n, q) 的生成元：初等平移 I + e_ij 与本原元的对角伸缩"""
    generators = []
    for i in range(n):
        for j in range(n):
            if i != j:
                g = identity(field, n)
                g[i][j] = field.one()
                generators.append(g)
    if field.q > 2:
        g = identity(field, n)
        g[0][0] = field.primitive_element()
        generators.append(g)
    return generators


def _check_generators(generators: Sequence[Matrix], n: int) -> None:
    for g in generators:
        require(
            len(g) == n and all(len(row) == n for row in g),
            ErrorType.DIMENSION_MISMATCH,
            f"生成元必须为 {n}x{n} 矩阵",
        )
        if not is_invertible(g):
            raise HornCodesError(ErrorType.SINGULAR_MATRIX, "生成元不可逆", {"n": n})


def grassmann_orbit(U: Matrix, generators: Sequence[Matrix]) -> Set[Subspace]:
    """行空间 row(U) 在 ⟨generators⟩ 右乘下的轨道（广度优先闭包）"""
    require(len(U) > 0, ErrorType.INPUT_ERROR, "U 至少需要一行")
    field = U[0][0].field
    n = len(U[0])
    require(rank(U) == len(U), ErrorType.INPUT_ERROR, "U 必须行满秩", rows=len(U))
    _check_generators(generators, n)
    start = Subspace.span(field, U)
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for g in generators:
            image = Subspace.span(field, mat_mul([list(row) for row in current.basis], g), ambient=n)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    logger.debug(f"子空间轨道大小 {len(seen)}")
    return seen


def subspace_distance(S: Subspace, T: Subspace) -> int:
    """d(S, T) = dim S + dim T - 2 dim(S ∩ T)"""
    S.field.check_same(T.field)
    require(S.ambient == T.ambient, ErrorType.DIMENSION_MISMATCH, "子空间不在同一空间中")
    joint = rank([list(row) for row in S.basis + T.basis]) if S.basis + T.basis else 0
    return 2 * joint - S.dimension - T.dimension


def orbit_min_distance(orbit: Iterable[Subspace]) -> int:
    members = sorted(orbit, key=Subspace.key)
    require(len(members) >= 2, ErrorType.INPUT_ERROR, "最小距离至少需要两个子空间")
    return min(
        subspace_distance(members[i], members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )


def _check_permutation(sigma: Sequence[int], n: int) -> Tuple[int, ...]:
    sigma = tuple(int(v) for v in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise HornCodesError(
            ErrorType.INPUT_ERROR,
            f"不是 {{1..{n}}} 上的置换: {sigma}",
            {"permutation": sigma},
        )
    return sigma


def configuration_orbits(
    config: Sequence[Hashable], generators: Sequence[Sequence[int]], ordered: bool = False
) -> Set[tuple]:
    """
    点配置在置换群下的轨道，置换作用为 new[i] = config[σ(i) - 1]

    ordered=False 时按无序多重集等同（元素按字符串排序作规范键）。
    """
    config = tuple(config)
    n = len(config)
    permutations = [_check_permutation(sigma, n) for sigma in generators]
    seen = {config}
    frontier = deque([config])
    while frontier:
        current = frontier.popleft()
        for sigma in permutations:
            image = tuple(current[s - 1] for s in sigma)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    if ordered:
        return seen
    return {tuple(sorted(c, key=str)) for c in seen}
