"""
P^1 上的除子、Riemann-Roch 空间与求值码

求值码 C(D, P) = {(f(P_1), ..., f(P_n)) | f ∈ L(D)}，最小距离通过穷举全部消息得到。
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.func_tools import map as parallel_map
from horn_codes.linalg import determinant, rank, rref
from horn_codes.orbits import Subspace
from horn_codes.partitions import q_binomial
from horn_codes.polynomials import (
    INFINITY,
    P1Point,
    Poly,
    RationalFunction,
    point_sort_key,
    projective_line,
)
from horn_codes.types import GrassmannParams

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTION_BOUND = 10**6


@dataclass(frozen=True)
class Divisor:
    """P^1(F_q) 上的除子 Σ n_P [P]，不存零重数"""

    field: FieldSpec
    multiplicities: Union[Mapping[P1Point, int], Tuple[Tuple[P1Point, int], ...]] = ()

    def __post_init__(self) -> None:
        raw = self.multiplicities.items() if isinstance(self.multiplicities, Mapping) else self.multiplicities
        merged: Dict[P1Point, int] = {}
        for point, n in raw:
            if point is not INFINITY:
                point = self.field.element(point)
            merged[point] = merged.get(point, 0) + int(n)
        items = tuple(
            sorted(((p, n) for p, n in merged.items() if n), key=lambda item: point_sort_key(item[0]))
        )
        object.__setattr__(self, "multiplicities", items)

    @property
    def degree(self) -> int:
        return sum(n for _, n in self.multiplicities)

    def items(self) -> Tuple[Tuple[P1Point, int], ...]:
        return self.multiplicities

    def multiplicity(self, point: P1Point) -> int:
        return dict(self.multiplicities).get(point, 0)

    @property
    def support(self) -> List[P1Point]:
        return [p for p, _ in self.multiplicities]

    def __add__(self, other: "Divisor") -> "Divisor":
        self.field.check_same(other.field)
        return Divisor(self.field, self.multiplicities + other.multiplicities)

    def __str__(self) -> str:
        from horn_codes.formats import format_divisor

        return format_divisor(self)


def riemann_roch_basis(divisor: Divisor) -> List[RationalFunction]:
    """
    L(D) 的基 {x^i / h | 0 <= i <= deg D}，h = Π_{a 有限} (x - a)^{n_a}

    亏格为 0，deg D < 0 时 L(D) = 0。
    """
    field = divisor.field
    if divisor.degree < 0:
        return []
    x = Poly.x(field)
    poles = Poly.constant(field, 1)
    zeros = Poly.constant(field, 1)
    for point, n in divisor.items():
        if point is INFINITY:
            continue
        factor = x - point
        if n > 0:
            poles = poles * factor**n
        else:
            zeros = zeros * factor ** (-n)
    return [RationalFunction(x**i * zeros, poles) for i in range(divisor.degree + 1)]


def _evaluate_or_fail(phi: RationalFunction, point: P1Point) -> FieldElement:
    value = phi.evaluate(point)
    if value is INFINITY:
        raise HornCodesError(
            ErrorType.POLE_AT_POINT,
            f"{phi} 在 {point} 处有极点",
            {"phi": str(phi), "point": str(point)},
        )
    return value


@dataclass(frozen=True)
class LinearCode:
    """生成矩阵给出的线性码；维数为生成矩阵的秩"""

    field: FieldSpec
    length: int
    generator: Tuple[Tuple[FieldElement, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(self.field.element(v) for v in row) for row in self.generator)
        require(
            all(len(row) == self.length for row in rows),
            ErrorType.DIMENSION_MISMATCH,
            f"生成矩阵的列数应为 {self.length}",
        )
        object.__setattr__(self, "generator", rows)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement]], length: Optional[int] = None) -> "LinearCode":
        if length is None:
            require(len(rows) > 0, ErrorType.INPUT_ERROR, "空生成矩阵需要给出码长")
            length = len(rows[0])
        return cls(field, length, tuple(tuple(row) for row in rows))

    @cached_property
    def dimension(self) -> int:
        return rank([list(row) for row in self.generator]) if self.generator else 0

    @cached_property
    def basis(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        if not self.generator:
            return ()
        reduced, pivots = rref([list(row) for row in self.generator])
        return tuple(tuple(reduced[i]) for i in range(len(pivots)))

    @cached_property
    def min_distance(self) -> int:
        return min_distance(self)

    def __str__(self) -> str:
        from horn_codes.formats import format_code

        return format_code(self, with_distance=False)


def evaluation_code(divisor: Divisor, eval_points: Sequence[P1Point]) -> LinearCode:
    """行 (b(P_1), ..., b(P_n))，b 取遍 L(D) 的基"""
    field = divisor.field
    points = [p if p is INFINITY else field.element(p) for p in eval_points]
    require(len(points) > 0, ErrorType.INPUT_ERROR, "求值点集为空")
    if len(set(points)) != len(points):
        raise HornCodesError(ErrorType.INPUT_ERROR, "求值点重复", {"points": [str(p) for p in points]})
    support = set(divisor.support)
    collisions = [str(p) for p in points if p in support]
    if collisions:
        raise HornCodesError(
            ErrorType.SUPPORT_COLLISION,
            f"求值点落在除子支撑上: {collisions}",
            {"divisor": str(divisor), "points": collisions},
        )
    rows = [[_evaluate_or_fail(b, p) for p in points] for b in riemann_roch_basis(divisor)]
    code = LinearCode(field, len(points), tuple(tuple(row) for row in rows))
    logger.debug(f"求值码 D = {divisor}: n = {code.length}, k = {code.dimension}")
    return code


def direct_sum(codes: Sequence[LinearCode]) -> LinearCode:
    """块对角拼接：码长相加、维数相加，最小距离取各分量最小值"""
    require(len(codes) > 0, ErrorType.INPUT_ERROR, "直和至少需要一个分量")
    field = codes[0].field
    for part in codes[1:]:
        field.check_same(part.field)
    total = sum(part.length for part in codes)
    zero = field.zero()
    rows = []
    offset = 0
    for part in codes:
        for row in part.basis:
            rows.append((zero,) * offset + row + (zero,) * (total - offset - part.length))
        offset += part.length
    return LinearCode(field, total, tuple(rows))


def direct_sum_code(divisors: Sequence[Divisor], eval_points: Optional[Sequence[P1Point]] = None) -> LinearCode:
    """
    秩 r 向量丛码的可分情形：O(D_1) ⊕ ... ⊕ O(D_r) 在同一组点上求值

    默认求值点为全部除子支撑之外的 P^1 有理点；码长 r·n。
    """
    require(len(divisors) > 0, ErrorType.INPUT_ERROR, "直和至少需要一个除子")
    field = divisors[0].field
    for divisor in divisors[1:]:
        field.check_same(divisor.field)
    if eval_points is None:
        support = {p for divisor in divisors for p in divisor.support}
        eval_points = [p for p in projective_line(field) if p not in support]
    code = direct_sum([evaluation_code(divisor, eval_points) for divisor in divisors])
    logger.debug(f"直和码 r = {len(divisors)}: n = {code.length}, k = {code.dimension}")
    return code


def rational_map_code(phi: RationalFunction, eval_points: Sequence[P1Point]) -> Tuple[FieldElement, ...]:
    """商码的一个码字 (φ(P_1), ..., φ(P_n))"""
    return tuple(
        _evaluate_or_fail(phi, p if p is INFINITY else phi.field.element(p)) for p in eval_points
    )


def three_point_code(a: int, b: int, c: int, d: int, q: int) -> LinearCode:
    """
    GF(q^2) 上除子 a[0] + b[1] + c[∞] 的求值码，求值点为除 0、1 外的全部域元素

    要求 d | q^2 - 1。
    """
    require(d >= 1, ErrorType.INPUT_ERROR, f"d 必须为正: {d}", d=d)
    field = FieldSpec.of_order(q * q)
    if (q * q - 1) % d:
        raise HornCodesError(
            ErrorType.DIVISIBILITY_ERROR,
            f"d = {d} 不整除 q^2 - 1 = {q * q - 1}",
            {"d": d, "q": q},
        )
    zero, one = field.zero(), field.one()
    divisor = Divisor(field, {zero: a, one: b, INFINITY: c})
    points = [x for x in field.elements() if x != zero and x != one]
    require(len(points) > 0, ErrorType.INPUT_ERROR, "求值点集为空")
    return evaluation_code(divisor, points)


# ---------- 穷举最小距离 ----------

def _message_block(q: int, width: int) -> np.ndarray:
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(q), repeat=width)), dtype=np.int64)


def _chunk_weights(code: LinearCode, first: int) -> np.ndarray:
    """首个消息坐标固定为 first 的全部非零消息对应码字的重量"""
    add, mul = code.field.tables
    basis = np.array([[v.index for v in row] for row in code.basis], dtype=np.int64)
    k = basis.shape[0]
    messages = _message_block(code.field.q, k - 1)
    codewords = np.broadcast_to(mul[first, basis[0]], (messages.shape[0], code.length))
    for j in range(1, k):
        codewords = add[codewords, mul[messages[:, j - 1][:, None], basis[j][None, :]]]
    weights = np.count_nonzero(codewords, axis=1)
    if first == 0:
        weights = weights[np.any(messages != 0, axis=1)]
    return weights


def _check_exhaustion(code: LinearCode, bound: int) -> None:
    require(code.dimension >= 1, ErrorType.INPUT_ERROR, "零维码没有最小距离")
    total = code.field.q**code.dimension
    if total > bound:
        raise HornCodesError(
            ErrorType.EXHAUSTION_LIMIT,
            f"q^k = {total} 超出穷举上限 {bound}，请换用更小的实例",
            {"q": code.field.q, "k": code.dimension, "bound": bound},
        )


def min_distance(
    code: LinearCode, bound: int = DEFAULT_EXHAUSTION_BOUND, max_concurrency: Optional[int] = None
) -> int:
    """全部 q^k - 1 个非零码字的最小 Hamming 重量"""
    _check_exhaustion(code, bound)
    chunks = parallel_map(lambda first: _chunk_weights(code, first), range(code.field.q), max_concurrency=max_concurrency)
    return int(min(chunk.min() for chunk in chunks if chunk.size))


def weight_distribution(
    code: LinearCode, bound: int = DEFAULT_EXHAUSTION_BOUND, max_concurrency: Optional[int] = None
) -> List[int]:
    """A_w = 重量为 w 的码字个数，w = 0..n（含零码字）"""
    _check_exhaustion(code, bound)
    chunks = parallel_map(lambda first: _chunk_weights(code, first), range(code.field.q), max_concurrency=max_concurrency)
    counts = np.zeros(code.length + 1, dtype=np.int64)
    counts[0] = 1
    for chunk in chunks:
        counts += np.bincount(chunk, minlength=code.length + 1)
    return [int(v) for v in counts]


# ---------- Grassmann 码 ----------

def enumerate_subspaces(field: FieldSpec, dimension: int, ambient: int) -> List[Subspace]:
    """F_q^ambient 中全部 dimension 维子空间，按主元列与自由元逐一生成行最简形"""
    require(0 <= dimension <= ambient, ErrorType.INPUT_ERROR, f"要求 0 <= k <= n: ({dimension}, {ambient})")
    elements = field.elements()
    zero, one = field.zero(), field.one()
    subspaces = []
    for pivots in itertools.combinations(range(ambient), dimension):
        free_cells = [
            (i, j) for i, c in enumerate(pivots) for j in range(c + 1, ambient) if j not in pivots
        ]
        for values in itertools.product(elements, repeat=len(free_cells)):
            rows = [[zero] * ambient for _ in range(dimension)]
            for i, c in enumerate(pivots):
                rows[i][c] = one
            for (i, j), v in zip(free_cells, values):
                rows[i][j] = v
            subspaces.append(Subspace(field, ambient, tuple(tuple(row) for row in rows)))
    return subspaces


def count_subspaces(field: FieldSpec, dimension: int, ambient: int) -> int:
    return len(enumerate_subspaces(field, dimension, ambient))


def grassmann_code(n: int, r: int, q: int) -> LinearCode:
    """列为 F_q^{n+1} 中每个 (r+1) 维子空间的 Plücker 坐标"""
    field = FieldSpec.of_order(q)
    subspaces = enumerate_subspaces(field, r + 1, n + 1)
    coordinates = list(itertools.combinations(range(n + 1), r + 1))
    columns = [
        [determinant([[row[j] for j in cols] for row in s.basis]) for cols in coordinates]
        for s in subspaces
    ]
    rows = [[column[i] for column in columns] for i in range(len(coordinates))]
    return LinearCode(field, len(subspaces), tuple(tuple(row) for row in rows))


def grassmann_code_params(
    n: int, r: int, q: int, bruteforce: bool = True, bound: int = DEFAULT_EXHAUSTION_BOUND
) -> GrassmannParams:
    """码长为 Gauss 二项式；维数同时给出 C(n, r) 与 Plücker 矩阵的秩"""
    require(0 <= r <= n, ErrorType.INPUT_ERROR, f"要求 0 <= r <= n: (n, r) = ({n}, {r})", n=n, r=r)
    length = q_binomial(n, r, q)
    dimension_bruteforce = None
    if bruteforce:
        if length > bound:
            raise HornCodesError(
                ErrorType.EXHAUSTION_LIMIT,
                f"子空间个数 {length} 超出穷举上限 {bound}",
                {"n": n, "r": r, "q": q},
            )
        code = grassmann_code(n, r, q)
        if code.length != length:
            raise HornCodesError(
                ErrorType.INVARIANT_FAILURE,
                f"穷举得到 {code.length} 个子空间，Gauss 二项式为 {length}",
                {"n": n, "r": r, "q": q},
            )
        dimension_bruteforce = code.dimension
    return GrassmannParams(
        n=n,
        r=r,
        q=q,
        length=length,
        dimension_binomial=comb(n, r),
        dimension_bruteforce=dimension_bruteforce,
    )
