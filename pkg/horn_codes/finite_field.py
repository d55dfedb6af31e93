"""
有限域 GF(p^k) 的精确运算

元素以幂基 {1, α, ..., α^{k-1}} 下的坐标向量表示，乘法按首一不可约模多项式约化。
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from enum import Enum
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from horn_codes.cache import memoize
from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.partitions import is_prime, prime_power_decomposition

logger = logging.getLogger(__name__)


def _mod_p_divides(divisor: Tuple[int, ...], dividend: Tuple[int, ...], p: int) -> bool:
    """GF(p)[x] 上 divisor 是否整除 dividend（divisor 首一）"""
    remainder = list(dividend)
    d = len(divisor) - 1
    for shift in range(len(remainder) - 1 - d, -1, -1):
        lead = remainder[shift + d] % p
        if lead:
            for i, c in enumerate(divisor):
                remainder[shift + i] = (remainder[shift + i] - lead * c) % p
    return not any(c % p for c in remainder[:d])


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """穷举所有次数 <= k/2 的首一因子判定不可约性（升幂系数，首一）"""
    coeffs = tuple(c % p for c in coeffs)
    degree = len(coeffs) - 1
    for d in range(1, degree // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _mod_p_divides(tuple(low) + (1,), coeffs, p):
                return False
    return True


@memoize
def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """按枚举顺序取第一个 k 次首一不可约多项式"""
    for index in range(p**k):
        low = [(index // p**i) % p for i in range(k)]
        candidate = tuple(low) + (1,)
        if is_irreducible_mod_p(candidate, p):
            return candidate
    raise HornCodesError(ErrorType.INVARIANT_FAILURE, f"找不到 GF({p})上的 {k} 次不可约多项式")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k)：特征 p、扩张次数 k、模多项式（k > 1 时存在，升幂系数）"""

    p: int
    k: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        require(is_prime(self.p), ErrorType.INPUT_ERROR, f"特征必须为素数: {self.p}", p=self.p)
        require(self.k >= 1, ErrorType.INPUT_ERROR, f"扩张次数必须为正整数: {self.k}", k=self.k)
        if self.k == 1:
            object.__setattr__(self, "modulus", None)
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.k))
            return
        modulus = tuple(int(c) % self.p for c in self.modulus)
        require(
            len(modulus) == self.k + 1 and modulus[-1] == 1,
            ErrorType.INPUT_ERROR,
            f"模多项式必须为 {self.k} 次首一多项式: {modulus}",
        )
        require(
            is_irreducible_mod_p(modulus, self.p),
            ErrorType.INPUT_ERROR,
            f"模多项式在 GF({self.p}) 上可约: {modulus}",
        )
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def of_order(cls, q: int) -> "FieldSpec":
        p, k = prime_power_decomposition(q)
        return cls(p, k)

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return self.q

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            self.check_same(value.field)
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coords = [int(c) % self.p for c in value]
        require(
            len(coords) <= self.k,
            ErrorType.INPUT_ERROR,
            f"坐标个数超过扩张次数 {self.k}: {coords}",
        )
        return FieldElement(self, tuple(coords) + (0,) * (self.k - len(coords)))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def generator(self) -> "FieldElement":
        """幂基生成元 α（素域时为 1）"""
        if self.k == 1:
            return self.one()
        return self.element((0, 1))

    def from_index(self, index: int) -> "FieldElement":
        require(0 <= index < self.q, ErrorType.INPUT_ERROR, f"元素编号越界: {index}")
        return FieldElement(self, tuple((index // self.p**i) % self.p for i in range(self.k)))

    def elements(self) -> List["FieldElement"]:
        """全部元素，按编号 Σ c_i p^i 升序（0 在最前）"""
        return list(self._elements)

    def nonzero_elements(self) -> List["FieldElement"]:
        return list(self._elements[1:])

    @cached_property
    def _elements(self) -> Tuple["FieldElement", ...]:
        return tuple(self.from_index(i) for i in range(self.q))

    @cached_property
    def tables(self) -> Tuple[np.ndarray, np.ndarray]:
        """按元素编号的加法表与乘法表，供向量化穷举使用"""
        elements = self._elements
        add = np.zeros((self.q, self.q), dtype=np.int64)
        mul = np.zeros((self.q, self.q), dtype=np.int64)
        for a in elements:
            for b in elements:
                add[a.index, b.index] = (a + b).index
                mul[a.index, b.index] = (a * b).index
        logger.debug(f"构建 GF({self.q}) 运算表")
        return add, mul

    def primitive_element(self) -> "FieldElement":
        for candidate in self._elements[1:]:
            if candidate.multiplicative_order() == self.q - 1:
                return candidate
        raise HornCodesError(ErrorType.INVARIANT_FAILURE, f"GF({self.q}) 无本原元")

    def check_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise HornCodesError(
                ErrorType.FIELD_MISMATCH,
                f"GF({self.q}) 与 GF({other.q}) 的元素不能混合运算",
                {"left": str(self), "right": str(other)},
            )

    def __str__(self) -> str:
        if self.k == 1:
            return str(self.p)
        from horn_codes.formats import format_mod_p_poly

        return f"{self.p}^{self.k}/{format_mod_p_poly(self.modulus)}"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec = dc_field(repr=False)
    coords: Tuple[int, ...]

    @property
    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(other, int):
            return self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        self.field.check_same(other.field)
        return other

    def __add__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coords))

    def __sub__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        spec = self.field
        p, k = spec.p, spec.k
        if k == 1:
            return FieldElement(spec, ((self.coords[0] * other.coords[0]) % p,))
        product = [0] * (2 * k - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    product[i + j] += a * b
        modulus = spec.modulus
        for shift in range(2 * k - 2, k - 1, -1):
            lead = product[shift] % p
            if lead:
                for i in range(k + 1):
                    product[shift - k + i] -= lead * modulus[i]
        return FieldElement(spec, tuple(c % p for c in product[:k]))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise HornCodesError(ErrorType.ZERO_DIVISION, "零元没有逆元", {"field": str(self.field)})
        if self.field.k == 1:
            return FieldElement(self.field, (pow(self.coords[0], self.field.p - 2, self.field.p),))
        return self ** (self.field.q - 2)

    def __truediv__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int) -> "FieldElement":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def frobenius(self) -> "FieldElement":
        return self ** self.field.p

    def multiplicative_order(self) -> int:
        require(not self.is_zero(), ErrorType.ZERO_DIVISION, "零元没有乘法阶")
        order, current = 1, self
        while current != self.field.one():
            current = current * self
            order += 1
        return order

    def __str__(self) -> str:
        from horn_codes.formats import format_field_element

        return format_field_element(self)

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.q}), {self})"


class FieldOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    INV = "inv"
    POW = "pow"


def field_arithmetic(
    a: FieldElement, b: Union[FieldElement, int, None], op: Union[FieldOp, str]
) -> FieldElement:
    """单步域运算；pow 时 b 为整数指数，inv 时忽略 b"""
    op = FieldOp(op)
    if op is FieldOp.INV:
        return a.inverse()
    if op is FieldOp.POW:
        require(isinstance(b, int), ErrorType.INPUT_ERROR, "pow 的指数必须为整数")
        return a**b
    require(b is not None, ErrorType.INPUT_ERROR, f"{op.value} 需要两个操作数")
    if isinstance(b, FieldElement):
        a.field.check_same(b.field)
    if op is FieldOp.ADD:
        return a + b
    if op is FieldOp.SUB:
        return a - b
    if op is FieldOp.MUL:
        return a * b
    return a / b


def iter_vectors(field: FieldSpec, length: int) -> Iterator[Tuple[FieldElement, ...]]:
    return itertools.product(field.elements(), repeat=length)
