"""
GF(p^k)[x] 上的多项式与有理函数

包括带余除法、Euclid 商序列、连分数重建以及有理映射在 P^1 上的局部次数。
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.partitions import Partition

logger = logging.getLogger(__name__)

# 零多项式的次数，低于任何整数
NEG_INF = -math.inf


class Infinity:
    """P^1 上的无穷远点"""

    _instance = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __str__(self) -> str:
        return "inf"

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()

P1Point = Union[FieldElement, Infinity]


def projective_line(field: FieldSpec) -> List[P1Point]:
    """P^1(F_q)：全部域元素，∞ 在最后"""
    return [*field.elements(), INFINITY]


def point_sort_key(point: P1Point) -> Tuple[int, int]:
    if point is INFINITY:
        return (1, 0)
    return (0, point.index)


@dataclass(frozen=True)
class Poly:
    """升幂系数，无末尾零"""

    field: FieldSpec
    coeffs: Tuple[FieldElement, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [self.field.element(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def constant(cls, field: FieldSpec, value: Union[int, FieldElement]) -> "Poly":
        return cls(field, (field.element(value),))

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coefficient: Union[int, FieldElement] = 1) -> "Poly":
        return cls(field, (field.zero(),) * degree + (field.element(coefficient),))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls.monomial(field, 1)

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Sequence[FieldElement]) -> "Poly":
        result = cls.constant(field, 1)
        for root in roots:
            result = result * cls(field, (-field.element(root), field.one()))
        return result

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == self.field.one()

    def _coerce(self, other: Union["Poly", int, FieldElement]) -> "Poly":
        if isinstance(other, Poly):
            self.field.check_same(other.field)
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other: Union["Poly", int, FieldElement]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Poly", int, FieldElement]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[int, FieldElement]) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Poly", int, FieldElement]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        product = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] = product[i + j] + a * b
        return Poly(self.field, tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        require(exponent >= 0, ErrorType.INPUT_ERROR, "多项式幂指数必须非负")
        result = Poly.constant(self.field, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c: Union[int, FieldElement]) -> "Poly":
        c = self.field.element(c)
        return Poly(self.field, tuple(a * c for a in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.leading.inverse())

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise HornCodesError(ErrorType.ZERO_DIVISION, "多项式除以零", {"dividend": str(self)})
        remainder = list(self.coeffs)
        d = len(other.coeffs) - 1
        if len(remainder) - 1 < d:
            return Poly.zero(self.field), self
        quotient = [self.field.zero()] * (len(remainder) - d)
        inverse_lead = other.leading.inverse()
        for shift in range(len(remainder) - 1 - d, -1, -1):
            factor = remainder[shift + d] * inverse_lead
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(other.coeffs):
                    remainder[shift + i] = remainder[shift + i] - factor * c
        return Poly(self.field, tuple(quotient)), Poly(self.field, tuple(remainder[:d]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """self | other；零只整除零"""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __call__(self, point: Union[int, FieldElement]) -> FieldElement:
        point = self.field.element(point)
        value = self.field.zero()
        for c in reversed(self.coeffs):
            value = value * point + c
        return value

    def shift(self, c: Union[int, FieldElement]) -> "Poly":
        """f(z + c)"""
        linear = Poly(self.field, (self.field.element(c), self.field.one()))
        result = Poly.zero(self.field)
        for coeff in reversed(self.coeffs):
            result = result * linear + coeff
        return result

    def reversed_to(self, degree: int) -> "Poly":
        """z^degree · f(1/z)"""
        require(degree >= self.degree, ErrorType.INPUT_ERROR, f"反转次数 {degree} 小于多项式次数")
        return Poly(self.field, tuple(self.coefficient(degree - j) for j in range(degree + 1)))

    def valuation(self) -> Union[int, float]:
        """ord_x，零多项式为 +inf"""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def __str__(self) -> str:
        from horn_codes.formats import format_poly

        return format_poly(self)


def poly_divmod(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    """f = q·g + r，deg r < deg g"""
    f.field.check_same(g.field)
    return divmod(f, g)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """首一最大公因式；gcd(0, 0) = 0"""
    a.field.check_same(b.field)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass(frozen=True)
class RationalFunction:
    """最简形式 f/g，分母首一"""

    numerator: Poly
    denominator: Poly

    def __post_init__(self) -> None:
        f, g = self.numerator, self.denominator
        f.field.check_same(g.field)
        if g.is_zero():
            raise HornCodesError(ErrorType.ZERO_DIVISION, "有理函数的分母为零", {"numerator": str(f)})
        if f.is_zero():
            object.__setattr__(self, "denominator", Poly.constant(f.field, 1))
            return
        common = poly_gcd(f, g)
        f, g = f // common, g // common
        unit = g.leading.inverse()
        object.__setattr__(self, "numerator", f.scale(unit))
        object.__setattr__(self, "denominator", g.scale(unit))

    @classmethod
    def from_poly(cls, f: Poly) -> "RationalFunction":
        return cls(f, Poly.constant(f.field, 1))

    @property
    def field(self) -> FieldSpec:
        return self.numerator.field

    @property
    def degree(self) -> int:
        """deg φ = max(deg f, deg g)"""
        return int(max(self.numerator.degree, self.denominator.degree, 0))

    def is_constant(self) -> bool:
        return self.numerator.degree <= 0 and self.denominator.degree <= 0

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def _coerce(self, other: Union["RationalFunction", Poly, int, FieldElement]) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, FieldElement)):
            return RationalFunction.from_poly(Poly.constant(self.field, other))
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def evaluate(self, point: P1Point) -> P1Point:
        """在 P^1 上求值，极点返回 ∞"""
        f, g = self.numerator, self.denominator
        if point is INFINITY:
            if f.degree > g.degree:
                return INFINITY
            if f.degree < g.degree:
                return self.field.zero()
            return f.leading / g.leading
        denominator = g(point)
        if denominator.is_zero():
            return INFINITY
        return f(point) / denominator

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def rational_degree(phi: RationalFunction) -> int:
    return phi.degree


def euclid_quotients(f: Poly, g: Poly) -> List[Poly]:
    """
    Euclid 商序列 q_1, ..., q_k

    f_{i+1} = f_{i-1} mod f_i，q_i = f_{i-1} div f_i，余式为零时停止。
    """
    f.field.check_same(g.field)
    if g.is_zero():
        raise HornCodesError(ErrorType.ZERO_DIVISION, "Euclid 算法的除式为零", {"f": str(f)})
    require(
        f.degree >= g.degree,
        ErrorType.INPUT_ERROR,
        f"要求 deg f >= deg g: deg f = {f.degree}, deg g = {g.degree}",
    )
    quotients = []
    previous, current = f, g
    while not current.is_zero():
        q, r = divmod(previous, current)
        quotients.append(q)
        previous, current = current, r
    logger.debug(f"Euclid 商序列长度 {len(quotients)}")
    return quotients


def continued_fraction_value(quotients: Sequence[Poly]) -> RationalFunction:
    """q_1 + 1/(q_2 + 1/(... + 1/q_k))"""
    require(len(quotients) > 0, ErrorType.INPUT_ERROR, "商序列为空")
    value = RationalFunction.from_poly(quotients[-1])
    for q in reversed(quotients[:-1]):
        value = value.reciprocal() + q
    return value


def quotient_degree_partition(phi: RationalFunction) -> Partition:
    """Euclid 商的次数构成的划分（零次商不计）"""
    quotients = euclid_quotients(phi.numerator, phi.denominator)
    degrees = sorted((int(q.degree) for q in quotients if q.degree > 0), reverse=True)
    return Partition(tuple(degrees))


def local_degree(phi: RationalFunction, x0: P1Point) -> int:
    """
    局部次数 m_φ(x0) = ord_{z=0} ψ(z)，ψ = σ2 ∘ φ ∘ σ1

    σ1 取 z ↦ z + x0（x0 = ∞ 时取 z ↦ 1/z），σ2 取 w ↦ w - φ(x0)（φ(x0) = ∞ 时取 w ↦ 1/w）。
    """
    require(not phi.is_constant(), ErrorType.INPUT_ERROR, f"常值映射没有局部次数: {phi}")
    f, g = phi.numerator, phi.denominator
    if x0 is INFINITY:
        top = phi.degree
        shifted_f, shifted_g = f.reversed_to(top), g.reversed_to(top)
    else:
        x0 = phi.field.element(x0)
        shifted_f, shifted_g = f.shift(x0), g.shift(x0)

    g_at_zero = shifted_g.coefficient(0)
    if g_at_zero:
        y = shifted_f.coefficient(0) / g_at_zero
        order = (shifted_f - shifted_g.scale(y)).valuation()
    else:
        order = shifted_g.valuation()
    if not isinstance(order, int) or order < 1:
        raise HornCodesError(
            ErrorType.INVARIANT_FAILURE,
            f"局部次数计算异常: {order}",
            {"phi": str(phi), "x0": str(x0)},
        )
    return order


def fiber(phi: RationalFunction, y: P1Point) -> List[P1Point]:
    """φ^{-1}(y) ∩ P^1(F_q)"""
    return [x for x in projective_line(phi.field) if phi.evaluate(x) == y]
