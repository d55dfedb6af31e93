"""
GF(q)[x] 上的多项式矩阵

Smith 标准形、行列式因子、不变因子划分，以及乘积问题 C = A·B 的划分三元组。
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.partitions import Partition
from horn_codes.polynomials import Poly, RationalFunction, euclid_quotients, poly_gcd

logger = logging.getLogger(__name__)

Entry = Union[Poly, int, FieldElement]


@dataclass(frozen=True)
class PolyMatrix:
    field: FieldSpec
    rows: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(self._entry(v) for v in row) for row in self.rows)
        if rows:
            width = len(rows[0])
            require(
                all(len(row) == width for row in rows),
                ErrorType.DIMENSION_MISMATCH,
                "多项式矩阵各行长度不一致",
                widths=[len(row) for row in rows],
            )
        object.__setattr__(self, "rows", rows)

    def _entry(self, value: Entry) -> Poly:
        if isinstance(value, Poly):
            self.field.check_same(value.field)
            return value
        return Poly.constant(self.field, value)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Entry]]) -> "PolyMatrix":
        return cls(field, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "PolyMatrix":
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "PolyMatrix":
        return cls(field, tuple(tuple(0 for _ in range(n)) for _ in range(m)))

    @classmethod
    def diagonal(cls, field: FieldSpec, entries: Sequence[Entry]) -> "PolyMatrix":
        n = len(entries)
        return cls(field, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def is_square(self) -> bool:
        m, n = self.shape
        return m == n

    def __getitem__(self, index: Tuple[int, int]) -> Poly:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self.field.check_same(other.field)
        m, inner = self.shape
        inner_other, n = other.shape
        require(
            inner == inner_other,
            ErrorType.DIMENSION_MISMATCH,
            f"矩阵乘法维数不符: {m}x{inner} · {inner_other}x{n}",
        )
        zero = Poly.zero(self.field)
        rows = []
        for i in range(m):
            row = []
            for j in range(n):
                total = zero
                for t in range(inner):
                    a = self.rows[i][t]
                    if a:
                        total = total + a * other.rows[t][j]
                row.append(total)
            rows.append(tuple(row))
        return PolyMatrix(self.field, tuple(rows))

    def is_diagonal(self) -> bool:
        return all(
            entry.is_zero() for i, row in enumerate(self.rows) for j, entry in enumerate(row) if i != j
        )

    def diagonal_entries(self) -> List[Poly]:
        m, n = self.shape
        return [self.rows[i][i] for i in range(min(m, n))]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def determinant(self) -> Poly:
        """按第一行 Laplace 展开，适用于桌面规模"""
        require(self.is_square(), ErrorType.DIMENSION_MISMATCH, f"行列式要求方阵: {self.shape}")
        return _laplace([list(row) for row in self.rows], self.field)

    def __str__(self) -> str:
        from horn_codes.formats import format_poly_matrix

        return format_poly_matrix(self)


def _laplace(rows: List[List[Poly]], field: FieldSpec) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.constant(field, 1)
    if n == 1:
        return rows[0][0]
    total = Poly.zero(field)
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _laplace(minor, field)
        total = total + term if j % 2 == 0 else total - term
    return total


@dataclass(frozen=True)
class SmithForm:
    """U·A·V = D，D 的对角线为首一不变因子 d_1 | d_2 | ...（零因子在最后）"""

    factors: Tuple[Poly, ...]
    U: PolyMatrix
    V: PolyMatrix
    D: PolyMatrix


def smith_normal_form(matrix: PolyMatrix) -> SmithForm:
    field = matrix.field
    m, n = matrix.shape
    zero = Poly.zero(field)
    D = [list(row) for row in matrix.rows]
    U = [list(row) for row in PolyMatrix.identity(field, m).rows]
    V = [list(row) for row in PolyMatrix.identity(field, n).rows]

    def swap_rows(i: int, k: int) -> None:
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int) -> None:
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, factor: Poly) -> None:
        """row_target += factor · row_source"""
        for table in (D, U):
            table[target] = [a + factor * b for a, b in zip(table[target], table[source])]

    def add_col(target: int, source: int, factor: Poly) -> None:
        for table in (D, V):
            for row in table:
                row[target] = row[target] + factor * row[source]

    rank = 0
    for t in range(min(m, n)):
        while True:
            candidates = [(D[i][j].degree, i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not candidates:
                break
            _, i, j = min(candidates)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = D[t][t]

            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q, r = divmod(D[i][t], pivot)
                    add_row(i, t, -q)
                    clean = clean and r.is_zero()
            for j in range(t + 1, n):
                if D[t][j]:
                    q, r = divmod(D[t][j], pivot)
                    add_col(j, t, -q)
                    clean = clean and r.is_zero()
            if not clean:
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if not pivot.divides(D[i][j])),
                None,
            )
            if offender is None:
                break
            logger.debug(f"第 {t} 个主元不整除第 {offender} 行，合并后重新选主元")
            add_row(t, offender, Poly.constant(field, 1))

        if D[t][t].is_zero():
            break
        unit = D[t][t].leading.inverse()
        D[t] = [entry.scale(unit) for entry in D[t]]
        U[t] = [entry.scale(unit) for entry in U[t]]
        rank += 1

    factors = tuple(D[t][t] if t < rank else zero for t in range(min(m, n)))
    logger.debug(f"Smith 标准形: 形状 {m}x{n}，秩 {rank}")
    return SmithForm(
        factors=factors,
        U=PolyMatrix.from_rows(field, U),
        V=PolyMatrix.from_rows(field, V),
        D=PolyMatrix.from_rows(field, D),
    )


def determinantal_divisors(matrix: PolyMatrix) -> List[Poly]:
    """Δ_i = 所有 i 阶子式的首一 gcd（全为零时为 0），i = 1..min(m, n)"""
    m, n = matrix.shape
    divisors = []
    for size in range(1, min(m, n) + 1):
        g = Poly.zero(matrix.field)
        for rows in itertools.combinations(range(m), size):
            for cols in itertools.combinations(range(n), size):
                g = poly_gcd(g, matrix.submatrix(rows, cols).determinant())
        divisors.append(g)
    return divisors


def invariant_factor_partition(matrix: PolyMatrix) -> Partition:
    """不变因子的 x-进赋值，按弱递减排列并去掉零"""
    require(matrix.is_square(), ErrorType.DIMENSION_MISMATCH, f"要求方阵: {matrix.shape}")
    factors = smith_normal_form(matrix).factors
    if any(f.is_zero() for f in factors):
        raise HornCodesError(
            ErrorType.SINGULAR_MATRIX,
            "矩阵奇异，存在零不变因子",
            {"matrix": str(matrix)},
        )
    valuations = sorted((int(f.valuation()) for f in factors), reverse=True)
    return Partition(tuple(v for v in valuations if v > 0))


@dataclass(frozen=True)
class HornInstance:
    alpha: Partition
    beta: Partition
    gamma: Partition
    product: PolyMatrix


def horn_instance(a: PolyMatrix, b: PolyMatrix) -> HornInstance:
    a.field.check_same(b.field)
    require(a.is_square() and b.is_square(), ErrorType.DIMENSION_MISMATCH, "A、B 必须为方阵")
    require(
        a.shape == b.shape,
        ErrorType.DIMENSION_MISMATCH,
        f"A、B 阶数不同: {a.shape} vs {b.shape}",
    )
    product = a @ b
    alpha = invariant_factor_partition(a)
    beta = invariant_factor_partition(b)
    gamma = invariant_factor_partition(product)
    if gamma.size != alpha.size + beta.size:
        raise HornCodesError(
            ErrorType.INVARIANT_FAILURE,
            f"|γ| = {gamma.size} 不等于 |α| + |β| = {alpha.size + beta.size}",
            {"alpha": str(alpha), "beta": str(beta), "gamma": str(gamma)},
        )
    return HornInstance(alpha=alpha, beta=beta, gamma=gamma, product=product)


def quotient_matrix(phi: RationalFunction) -> PolyMatrix:
    """连分数商 q_1, ..., q_k 组成的对角矩阵"""
    quotients = euclid_quotients(phi.numerator, phi.denominator)
    return PolyMatrix.diagonal(phi.field, quotients)


def random_poly(field: FieldSpec, max_degree: int, rng: random.Random, nonzero: bool = False) -> Poly:
    while True:
        poly = Poly(field, tuple(field.from_index(rng.randrange(field.q)) for _ in range(max_degree + 1)))
        if poly or not nonzero:
            return poly


def random_poly_matrix(
    field: FieldSpec, m: int, n: int, max_degree: int, rng: random.Random
) -> PolyMatrix:
    return PolyMatrix.from_rows(
        field, [[random_poly(field, max_degree, rng) for _ in range(n)] for _ in range(m)]
    )


def random_unimodular(
    field: FieldSpec, n: int, rng: random.Random, steps: Optional[int] = None, max_degree: int = 1
) -> PolyMatrix:
    """单位阵上随机施加初等行变换，行列式为非零常数"""
    rows = [list(row) for row in PolyMatrix.identity(field, n).rows]
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        factor = random_poly(field, max_degree, rng)
        rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
    unit = field.from_index(rng.randrange(1, field.q))
    rows[0] = [entry.scale(unit) for entry in rows[0]]
    return PolyMatrix.from_rows(field, rows)


def random_x_power_matrix(field: FieldSpec, n: int, max_valuation: int, rng: random.Random) -> PolyMatrix:
    """P · diag(x^{a_i}) · Q，P、Q 为随机幺模矩阵"""
    x = Poly.x(field)
    diagonal = PolyMatrix.diagonal(field, [x ** rng.randint(0, max_valuation) for _ in range(n)])
    return random_unimodular(field, n, rng) @ diagonal @ random_unimodular(field, n, rng)
