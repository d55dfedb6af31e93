"""
对称函数 - Schur 多项式、Littlewood-Richardson 系数、对称群特征标与 Kronecker 系数

LR 系数有两条独立的计算路径：
1. LR 斜表计数（主算法）
2. Schur 多项式相乘后按 Schur 基展开（校验用）
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Tuple, Union

import numpy as np

from horn_codes.cache import memoize
from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.func_tools import filter as parallel_filter
from horn_codes.partitions import Partition, partitions_of
from horn_codes.types import ConventionOutcome, MatrixExperimentReport

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class SymmetricPolynomial:
    """m 元整系数多项式；terms 为按指数排序的 (指数向量, 非零系数)"""

    variable_count: int
    terms: Tuple[Tuple[Exponent, int], ...] = ()

    def __post_init__(self) -> None:
        require(self.variable_count >= 1, ErrorType.INPUT_ERROR, "变量个数必须为正")
        merged: Dict[Exponent, int] = {}
        for exponent, c in self.terms:
            exponent = tuple(int(e) for e in exponent)
            require(
                len(exponent) == self.variable_count and all(e >= 0 for e in exponent),
                ErrorType.INPUT_ERROR,
                f"指数向量不合法: {exponent}",
            )
            merged[exponent] = merged.get(exponent, 0) + int(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_mapping(cls, variable_count: int, terms: Mapping[Exponent, int]) -> "SymmetricPolynomial":
        return cls(variable_count, tuple(terms.items()))

    @classmethod
    def zero(cls, variable_count: int) -> "SymmetricPolynomial":
        return cls(variable_count, ())

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    def coefficient(self, exponent: Exponent) -> int:
        return self.as_dict().get(tuple(exponent), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SymmetricPolynomial") -> None:
        require(
            self.variable_count == other.variable_count,
            ErrorType.DIMENSION_MISMATCH,
            f"变量个数不同: {self.variable_count} vs {other.variable_count}",
        )

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check(other)
        return SymmetricPolynomial(self.variable_count, self.terms + other.terms)

    def __neg__(self) -> "SymmetricPolynomial":
        return SymmetricPolynomial(self.variable_count, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "SymmetricPolynomial":
        return SymmetricPolynomial(self.variable_count, tuple((e, c * factor) for e, c in self.terms))

    def __mul__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check(other)
        product: Counter = Counter()
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SymmetricPolynomial.from_mapping(self.variable_count, product)

    def leading_exponent(self) -> Exponent:
        """字典序最大的指数"""
        require(not self.is_zero(), ErrorType.INPUT_ERROR, "零多项式没有首项")
        return self.terms[-1][0]

    def is_symmetric(self) -> bool:
        table = self.as_dict()
        return all(
            table.get(permuted) == c for e, c in self.terms for permuted in set(itertools.permutations(e))
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for exponent, c in reversed(self.terms):
            monomial = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exponent) if e
            )
            if not monomial:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{c}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ")


def _semistandard_tableaux(shape: Partition, m: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """形状 shape、取值 1..m 的半标准 Young 表（行弱增、列严格增）"""
    cells = [(i, j) for i in range(shape.length) for j in range(shape.part(i))]
    grid: Dict[Tuple[int, int], int] = {}

    def fill(position: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if position == len(cells):
            yield tuple(tuple(grid[(i, j)] for j in range(shape.part(i))) for i in range(shape.length))
            return
        i, j = cells[position]
        low = 1
        if j > 0:
            low = max(low, grid[(i, j - 1)])
        if i > 0:
            low = max(low, grid[(i - 1, j)] + 1)
        for value in range(low, m + 1):
            grid[(i, j)] = value
            yield from fill(position + 1)
        grid.pop((i, j), None)

    yield from fill(0)


@memoize
def schur_polynomial(shape: Partition, m: int) -> SymmetricPolynomial:
    """s_λ(x_1, ..., x_m)，按半标准 Young 表逐个累加"""
    require(m >= 1, ErrorType.INPUT_ERROR, f"变量个数必须为正: {m}", m=m)
    terms: Counter = Counter()
    if shape.length <= m:
        for tableau in _semistandard_tableaux(shape, m):
            content = [0] * m
            for row in tableau:
                for value in row:
                    content[value - 1] += 1
            terms[tuple(content)] += 1
    return SymmetricPolynomial.from_mapping(m, terms)


def schur_expansion(poly: SymmetricPolynomial) -> Dict[Partition, int]:
    """按 Schur 基展开：反复减去首项对应的 c·s_λ"""
    remainder = poly
    expansion: Dict[Partition, int] = {}
    while not remainder.is_zero():
        exponent = remainder.leading_exponent()
        if any(a < b for a, b in zip(exponent, exponent[1:])):
            raise HornCodesError(
                ErrorType.INPUT_ERROR,
                f"多项式不对称，首项指数 {exponent} 不是划分",
                {"poly": str(poly)},
            )
        shape = Partition.from_sequence(exponent)
        c = remainder.coefficient(exponent)
        expansion[shape] = c
        remainder = remainder - schur_polynomial(shape, poly.variable_count).scale(c)
    return expansion


def _lr_tableaux_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """斜形 outer/inner、内容 content 的 LR 表个数：阅读词（自上而下、每行自右向左）为格路词"""
    rows = outer.length
    cells = [(i, j) for i in range(rows) for j in range(outer.part(i) - 1, inner.part(i) - 1, -1)]
    grid: Dict[Tuple[int, int], int] = {}
    counts = [0] * (content.length + 1)
    top = content.length

    def fill(position: int) -> int:
        if position == len(cells):
            return 1
        i, j = cells[position]
        high = grid.get((i, j + 1), top)
        low = 1
        if i > 0 and j >= inner.part(i - 1):
            low = grid[(i - 1, j)] + 1
        total = 0
        for value in range(low, high + 1):
            if counts[value] >= content.part(value - 1):
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            counts[value] += 1
            grid[(i, j)] = value
            total += fill(position + 1)
            counts[value] -= 1
            del grid[(i, j)]
        return total

    return fill(0)


@memoize
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^ν_{λμ}：ν/λ 上内容为 μ 的 LR 斜表个数"""
    if lam.size + mu.size != nu.size:
        return 0
    if not nu.contains(lam) or not nu.contains(mu):
        return 0
    return _lr_tableaux_count(nu, lam, mu)


@memoize
def _product_expansion(lam: Partition, mu: Partition, m: int) -> Tuple[Tuple[Partition, int], ...]:
    product = schur_polynomial(lam, m) * schur_polynomial(mu, m)
    return tuple(schur_expansion(product).items())


def lr_coefficient_by_expansion(lam: Partition, mu: Partition, nu: Partition) -> int:
    """s_λ·s_μ 在 |ν| 元中相乘并按 Schur 基读出 s_ν 的系数"""
    if lam.size + mu.size != nu.size:
        return 0
    if nu.size == 0:
        return 1
    return dict(_product_expansion(lam, mu, nu.size)).get(nu, 0)


def lr_product(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """s_λ·s_μ = Σ c^ν_{λμ} s_ν，只保留非零项"""
    result = {}
    for nu in partitions_of(lam.size + mu.size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            result[nu] = c
    return result


# ---------- 对称群特征标 ----------

@dataclass(frozen=True)
class CycleType:
    """置换的轮换型 ρ"""

    partition: Partition

    @property
    def n(self) -> int:
        return self.partition.size

    @property
    def z(self) -> int:
        """中心化子阶 z_ρ = Π i^{m_i} m_i!"""
        value = 1
        for part, multiplicity in Counter(self.partition.parts).items():
            value *= part**multiplicity * math.factorial(multiplicity)
        return value

    @property
    def class_size(self) -> int:
        return math.factorial(self.n) // self.z

    def __str__(self) -> str:
        return str(self.partition)


def _as_cycle_type(rho: Union[CycleType, Partition]) -> CycleType:
    return rho if isinstance(rho, CycleType) else CycleType(rho)


def z_rho(rho: Union[CycleType, Partition]) -> int:
    return _as_cycle_type(rho).z


def class_size(rho: Union[CycleType, Partition]) -> int:
    return _as_cycle_type(rho).class_size


@memoize
def _murnaghan_nakayama(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    """以 β 数（珠子）移除边界条带；符号为条带高度的奇偶"""
    if not cycles:
        return 1 if not shape else 0
    strip, rest = cycles[0], cycles[1:]
    length = len(shape)
    beads = [shape[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beads)
    total = 0
    for bead in beads:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        height = sum(1 for other in beads if target < other < bead)
        moved = sorted([b for b in beads if b != bead] + [target], reverse=True)
        new_shape = tuple(v for v in (moved[i] - (length - 1 - i) for i in range(length)) if v > 0)
        total += (-1) ** height * _murnaghan_nakayama(new_shape, rest)
    return total


def character_value(lam: Partition, rho: Union[CycleType, Partition]) -> int:
    """χ_λ(ρ)，Murnaghan-Nakayama 递推"""
    rho = _as_cycle_type(rho)
    require(
        lam.size == rho.n,
        ErrorType.INPUT_ERROR,
        f"|λ| = {lam.size} 与 |ρ| = {rho.n} 不等",
        lam=str(lam),
        rho=str(rho),
    )
    return _murnaghan_nakayama(lam.parts, rho.partition.parts)


def character_table(n: int) -> Tuple[List[Partition], List[CycleType], List[List[int]]]:
    """行按 λ、列按轮换型，二者都按 partitions_of(n) 的顺序"""
    shapes = partitions_of(n)
    classes = [CycleType(p) for p in shapes]
    table = [[character_value(lam, rho) for rho in classes] for lam in shapes]
    return shapes, classes, table


@memoize
def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """k^ν_{λμ} = (1/n!) Σ_ρ |C_ρ| χ_λ(ρ) χ_μ(ρ) χ_ν(ρ)"""
    require(
        lam.size == mu.size == nu.size,
        ErrorType.INPUT_ERROR,
        f"三个划分大小必须相同: {lam.size}, {mu.size}, {nu.size}",
        lam=str(lam),
        mu=str(mu),
        nu=str(nu),
    )
    n = nu.size
    total = 0
    for shape in partitions_of(n):
        rho = CycleType(shape)
        total += rho.class_size * character_value(lam, rho) * character_value(mu, rho) * character_value(nu, rho)
    value, remainder = divmod(total, math.factorial(n))
    if remainder or value < 0:
        raise HornCodesError(
            ErrorType.INVARIANT_FAILURE,
            f"Kronecker 系数不是非负整数: {total}/{n}!",
            {"lam": str(lam), "mu": str(mu), "nu": str(nu)},
        )
    return value


def rectangular_coefficients(n: int) -> List[int]:
    """三维 Kronecker 矩阵主对角线 ((i^n),(i^n),(i^n))，1 <= i <= n"""
    require(n >= 1, ErrorType.INPUT_ERROR, f"n 必须为正: {n}", n=n)
    values = []
    for i in range(1, n + 1):
        box = Partition((i,) * n)
        values.append(kronecker_coefficient(box, box, box))
    return values


# ---------- 系数矩阵切片 ----------

class SliceKind(str, Enum):
    LR = "lr"
    KRONECKER = "kronecker"


@dataclass(frozen=True)
class CoefficientSlice:
    """固定 ν 的系数矩阵，行列都以 partitions_of(|ν|) 为序"""

    nu: Partition
    kind: SliceKind
    index: Tuple[Partition, ...]
    matrix: np.ndarray

    def as_rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.matrix]


def _slice(index: List[Partition], entry) -> np.ndarray:
    size = len(index)
    matrix = np.zeros((size, size), dtype=np.int64)
    for a, lam in enumerate(index):
        for b, mu in enumerate(index):
            matrix[a, b] = entry(lam, mu)
    return matrix


def coefficient_matrix_slice(nu: Partition, kind: Union[SliceKind, str], stretch: int = 1) -> CoefficientSlice:
    """
    entry(λ, μ) = c^{stretch·ν}_{λμ}（LR）或 k^ν_{λμ}（Kronecker），λ、μ 取遍 partitions_of(|ν|)

    stretch = 1 为字面约定：LR 切片在 |ν| > 0 时恒为零；stretch = 2 把 ν 的每部分加倍，使 |λ|+|μ| = |2ν|。
    """
    kind = SliceKind(kind)
    index = partitions_of(nu.size)
    if kind is SliceKind.KRONECKER:
        matrix = _slice(index, lambda lam, mu: kronecker_coefficient(lam, mu, nu))
    else:
        target = nu.stretched(stretch)
        matrix = _slice(index, lambda lam, mu: lr_coefficient(lam, mu, target))
    return CoefficientSlice(nu=nu, kind=kind, index=tuple(index), matrix=matrix)


def matrix_product_experiment(nu: Partition) -> Tuple[np.ndarray, MatrixExperimentReport]:
    """
    LR 切片 × Kronecker 切片，并报告是否为单位阵

    两种约定都计算并写入报告；返回的矩阵取加倍约定（ν=(1) 时为 [1]）。
    结果只作记录，不作断言。
    """
    kronecker = coefficient_matrix_slice(nu, SliceKind.KRONECKER)
    identity = np.eye(len(kronecker.index), dtype=np.int64)
    outcomes = []
    products = {}
    for name, stretch, description in (
        ("literal", 1, "c^ν_{λμ}，λ、μ ⊢ |ν|"),
        ("stretched", 2, "c^{2ν}_{λμ}，λ、μ ⊢ |ν|，ν 各部分加倍"),
    ):
        lr = coefficient_matrix_slice(nu, SliceKind.LR, stretch=stretch)
        product = lr.matrix @ kronecker.matrix
        products[name] = product
        is_identity = bool(np.array_equal(product, identity))
        outcomes.append(
            ConventionOutcome(
                name=name,
                description=description,
                lr_matrix=lr.as_rows(),
                kronecker_matrix=kronecker.as_rows(),
                product=[[int(v) for v in row] for row in product],
                is_identity=is_identity,
            )
        )
        logger.debug(f"ν = {nu}，{name} 约定：乘积{'是' if is_identity else '不是'}单位阵")
    report = MatrixExperimentReport(
        nu=str(nu),
        index=[str(p) for p in kronecker.index],
        conventions=outcomes,
        returned_convention="stretched",
        note="C·K = I 作为实验记录，不作为不变量断言",
    )
    return products["stretched"], report


def lr_support(n: int, max_concurrency: int = 1) -> List[Tuple[Partition, Partition, Partition]]:
    """|λ|+|μ| = |ν| = n 且 c^ν_{λμ} > 0 的全部三元组"""
    require(n >= 1, ErrorType.INPUT_ERROR, f"n 必须为正: {n}", n=n)
    candidates = [
        (lam, mu, nu)
        for nu in partitions_of(n)
        for size in range(n + 1)
        for lam in partitions_of(size)
        for mu in partitions_of(n - size)
    ]
    support = parallel_filter(lambda t: lr_coefficient(*t) > 0, candidates, max_concurrency=max_concurrency)
    logger.debug(f"LR 支撑 n = {n}: {len(support)} / {len(candidates)}")
    return support
