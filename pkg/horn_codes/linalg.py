"""
GF(q) 上的稠密线性代数：行最简形、秩、行列式、矩阵乘法
"""

import logging
from typing import List, Sequence, Tuple

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

Matrix = List[List[FieldElement]]


def to_matrix(field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    """把整数或域元素的嵌套序列转换为域矩阵，检查行长一致"""
    matrix = [[field.element(v) for v in row] for row in rows]
    if matrix:
        width = len(matrix[0])
        require(
            all(len(row) == width for row in matrix),
            ErrorType.DIMENSION_MISMATCH,
            "矩阵各行长度不一致",
            widths=[len(row) for row in matrix],
        )
    return matrix


def identity(field: FieldSpec, n: int) -> Matrix:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def mat_mul(left: Matrix, right: Matrix) -> Matrix:
    if not left:
        return []
    require(
        len(left[0]) == len(right),
        ErrorType.DIMENSION_MISMATCH,
        f"矩阵乘法维数不符: {len(left)}x{len(left[0])} · {len(right)}x{len(right[0]) if right else 0}",
    )
    if not right:
        return [[] for _ in left]
    field = left[0][0].field
    width = len(right[0])
    result = []
    for row in left:
        out = []
        for j in range(width):
            total = field.zero()
            for a, b_row in zip(row, right):
                if a:
                    total = total + a * b_row[j]
            out.append(total)
        result.append(out)
    return result


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """行最简形及主元列；输入不被修改"""
    rows = [list(row) for row in matrix]
    if not rows:
        return rows, []
    height, width = len(rows), len(rows[0])
    pivots: List[int] = []
    top = 0
    for col in range(width):
        pivot_row = next((i for i in range(top, height) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[top], rows[pivot_row] = rows[pivot_row], rows[top]
        inverse = rows[top][col].inverse()
        rows[top] = [v * inverse for v in rows[top]]
        for i in range(height):
            if i != top and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == height:
            break
    return rows, pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def row_space_key(matrix: Matrix) -> Tuple[Tuple[int, ...], ...]:
    """行空间的规范键：非零 RREF 行的元素编号"""
    reduced, pivots = rref(matrix)
    return tuple(tuple(v.index for v in reduced[i]) for i in range(len(pivots)))


def determinant(matrix: Matrix) -> FieldElement:
    n = len(matrix)
    require(
        all(len(row) == n for row in matrix),
        ErrorType.DIMENSION_MISMATCH,
        "行列式要求方阵",
    )
    if n == 0:
        raise HornCodesError(ErrorType.INPUT_ERROR, "空矩阵没有确定的域")
    rows = [list(row) for row in matrix]
    field = rows[0][0].field
    det = field.one()
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot_row is None:
            return field.zero()
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        inverse = pivot.inverse()
        for i in range(col + 1, n):
            if rows[i][col]:
                factor = rows[i][col] * inverse
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return det


def is_invertible(matrix: Matrix) -> bool:
    return len(matrix) > 0 and len(matrix) == len(matrix[0]) and rank(matrix) == len(matrix)
