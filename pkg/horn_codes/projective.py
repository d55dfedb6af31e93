"""
PG(n, q) 中的射影几何：正规有理曲线、Veronese 映射、弧、直射变换与 Ω/Ψ 闭包算子
"""

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, List, Sequence, Set, Union

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.linalg import rank
from horn_codes.types import CollineationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectivePoint:
    """齐次坐标，首个非零坐标归一为 1"""

    field: FieldSpec
    coords: tuple

    def __post_init__(self) -> None:
        coords = tuple(self.field.element(c) for c in self.coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise HornCodesError(ErrorType.INPUT_ERROR, "齐次坐标不能全为零", {"length": len(coords)})
        inverse = lead.inverse()
        object.__setattr__(self, "coords", tuple(c * inverse for c in coords))

    @classmethod
    def of(cls, field: FieldSpec, coords: Sequence[Union[int, FieldElement]]) -> "ProjectivePoint":
        return cls(field, tuple(coords))

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def key(self) -> tuple:
        return tuple(c.index for c in self.coords)

    def __str__(self) -> str:
        from horn_codes.formats import format_point

        return format_point(self)


def _as_field(q: Union[int, FieldSpec]) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else FieldSpec.of_order(q)


def enumerate_projective_points(field: FieldSpec, n: int) -> List[ProjectivePoint]:
    """PG(n, q) 的全部 (q^{n+1}-1)/(q-1) 个点"""
    require(n >= 0, ErrorType.INPUT_ERROR, f"维数必须非负: {n}", n=n)
    zero, one = field.zero(), field.one()
    points = []
    for lead in range(n + 1):
        for tail in itertools.product(field.elements(), repeat=n - lead):
            points.append(ProjectivePoint(field, (zero,) * lead + (one,) + tuple(tail)))
    return points


def nrc_points(n: int, q: Union[int, FieldSpec]) -> List[ProjectivePoint]:
    """𝒱^n_1 = {(1, x, ..., x^n) | x ∈ F_q} ∪ {(0, ..., 0, 1)}"""
    require(n >= 1, ErrorType.INPUT_ERROR, f"n 必须为正: {n}", n=n)
    field = _as_field(q)
    points = [ProjectivePoint(field, tuple(x**i for i in range(n + 1))) for x in field.elements()]
    points.append(ProjectivePoint(field, (0,) * n + (1,)))
    return points


def veronese_map(point: ProjectivePoint, d: int) -> ProjectivePoint:
    """[x, y] ↦ [x^d, x^{d-1}y, ..., y^d]"""
    require(point.dimension == 1, ErrorType.DIMENSION_MISMATCH, f"需要 P^1 中的点: {point}")
    require(d >= 1, ErrorType.INPUT_ERROR, f"d 必须为正: {d}", d=d)
    x, y = point.coords
    return ProjectivePoint(point.field, tuple(x ** (d - i) * y**i for i in range(d + 1)))


def _common_dimension(points: Sequence[ProjectivePoint]) -> int:
    dimensions = {p.dimension for p in points}
    require(len(dimensions) <= 1, ErrorType.DIMENSION_MISMATCH, f"点的维数不一致: {sorted(dimensions)}")
    for p in points[1:]:
        points[0].field.check_same(p.field)
    return dimensions.pop() if dimensions else 0


def is_k_arc(points: Sequence[ProjectivePoint]) -> bool:
    """任意 min(n+1, k) 个点线性无关"""
    n = _common_dimension(points)
    size = min(n + 1, len(points))
    for subset in itertools.combinations(points, size):
        if rank([list(p.coords) for p in subset]) < size:
            return False
    return True


def vandermonde_product(xs: Sequence[FieldElement]) -> FieldElement:
    """Π_{i<j} (x_j - x_i)"""
    require(len(xs) > 0, ErrorType.INPUT_ERROR, "Vandermonde 乘积需要至少一个元素")
    value = xs[0].field.one()
    for i, j in itertools.combinations(range(len(xs)), 2):
        value = value * (xs[j] - xs[i])
    return value


def max_collinear(points: Sequence[ProjectivePoint]) -> int:
    """遍历 PG(2, q) 的全部直线（以对偶点表示），取含输入点最多的一条"""
    require(len(points) > 0, ErrorType.INPUT_ERROR, "点集为空")
    n = _common_dimension(points)
    require(n == 2, ErrorType.DIMENSION_MISMATCH, f"需要射影平面中的点，实际维数 {n}")
    field = points[0].field
    distinct = {p.key(): p for p in points}.values()
    best = 0
    for line in enumerate_projective_points(field, 2):
        on_line = 0
        for p in distinct:
            dot = field.zero()
            for a, b in zip(line.coords, p.coords):
                dot = dot + a * b
            if dot.is_zero():
                on_line += 1
        best = max(best, on_line)
    return best


def lucas_binomial_mod(m: int, j: int, p: int) -> int:
    """C(m, j) mod p，按 p 进制逐位相乘"""
    result = 1
    while m or j:
        m_digit, j_digit = m % p, j % p
        if j_digit > m_digit:
            return 0
        result = result * comb(m_digit, j_digit) % p
        m //= p
        j //= p
    return result


def omega_set(j: int, n: int, p: int) -> Set[int]:
    """Ω(j) = {m | 0 <= m <= n, C(m, j) ≢ 0 mod p}"""
    require(0 <= j <= n, ErrorType.INPUT_ERROR, f"要求 0 <= j <= n: j = {j}, n = {n}", j=j, n=n)
    return {m for m in range(n + 1) if lucas_binomial_mod(m, j, p)}


def _check_subset(J: Iterable[int], n: int) -> Set[int]:
    J = set(J)
    outside = sorted(j for j in J if not 0 <= j <= n)
    require(not outside, ErrorType.INPUT_ERROR, f"元素超出 {{0..{n}}}: {outside}", n=n)
    return J


def omega_closure(J: Iterable[int], n: int, p: int) -> Set[int]:
    """⋃_{j∈J} Ω(j)"""
    J = _check_subset(J, n)
    closure: Set[int] = set()
    for j in J:
        closure |= omega_set(j, n, p)
    return closure


def psi_closure(J: Iterable[int], n: int) -> Set[int]:
    """Ψ(J) = ⋃_{j∈J} {j, n-j}"""
    J = _check_subset(J, n)
    return J | {n - j for j in J}


def _point_set(points: Iterable[ProjectivePoint]) -> Set[tuple]:
    return {p.key() for p in points}


def collineation_invariance_check(n: int, q: Union[int, FieldSpec]) -> CollineationReport:
    """对角直射 x_i ↦ a^i x_i（a ≠ 0）与坐标反转是否保持 NRC 点集"""
    field = _as_field(q)
    points = nrc_points(n, field)
    original = _point_set(points)
    diagonal = {}
    for a in field.nonzero_elements():
        image = _point_set(
            ProjectivePoint(field, tuple(a**i * c for i, c in enumerate(p.coords))) for p in points
        )
        diagonal[str(a)] = image == original
    reversal = _point_set(ProjectivePoint(field, tuple(reversed(p.coords))) for p in points) == original
    report = CollineationReport(
        n=n,
        q=field.q,
        point_count=len(points),
        diagonal=diagonal,
        reversal_preserved=reversal,
    )
    logger.debug(f"NRC(n={n}, q={field.q}) 直射不变性: {report.all_preserved}")
    return report
