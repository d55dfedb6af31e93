#!/usr/bin/env python3
"""
多项式矩阵测试：Smith 标准形、行列式因子、不变因子划分与乘积实例
"""

import random

from core.verifier import check_smith_form
from horn_codes.exception import ErrorType, HornCodesError
from horn_codes.finite_field import FieldSpec
from horn_codes.formats import parse_poly, parse_poly_matrix, read_poly_matrix
from horn_codes.linalg import determinant, is_invertible, rank, rref, to_matrix
from horn_codes.partitions import EMPTY, Partition
from horn_codes.polynomials import Poly, RationalFunction, quotient_degree_partition
from horn_codes.poly_matrix import (
    PolyMatrix,
    determinantal_divisors,
    horn_instance,
    invariant_factor_partition,
    quotient_matrix,
    random_poly_matrix,
    random_x_power_matrix,
    smith_normal_form,
)
from horn_codes.symmetric_functions import lr_coefficient

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F5 = FieldSpec(5)


def expect_error(error_type, func, *args, **kwargs):
    try:
        func(*args, **kwargs)
    except HornCodesError as e:
        assert e.error_type is error_type, f"期望 {error_type}，实际 {e.error_type}"
        return e
    raise AssertionError(f"期望抛出 {error_type}")


def test_field_linear_algebra():
    print("🧪 Testing GF(q) linear algebra...")
    m = to_matrix(F5, [[1, 2], [3, 4]])
    assert determinant(m) == F5.element(3)
    assert is_invertible(m)
    singular = to_matrix(F5, [[1, 2], [2, 4]])
    assert rank(singular) == 1 and determinant(singular).is_zero()
    reduced, pivots = rref(to_matrix(F3, [[0, 2, 1], [1, 1, 0]]))
    assert pivots == [0, 1]
    assert reduced[0] == [F3.one(), F3.zero(), F3.element(1)]
    expect_error(ErrorType.DIMENSION_MISMATCH, to_matrix, F5, [[1, 2], [3]])
    expect_error(ErrorType.DIMENSION_MISMATCH, determinant, to_matrix(F5, [[1, 2]]))


def test_poly_matrix_basics():
    a = parse_poly_matrix(F3, "x; 1\n# 注释行\n0; x")
    assert a.shape == (2, 2)
    assert str(a) == "x; 1\n0; x"
    assert a.determinant() == parse_poly(F3, "x^2")
    assert a @ PolyMatrix.identity(F3, 2) == a
    expect_error(ErrorType.DIMENSION_MISMATCH, PolyMatrix.from_rows, F3, [[1, 2], [3]])
    expect_error(ErrorType.DIMENSION_MISMATCH, lambda: a @ PolyMatrix.zeros(F3, 3, 1))
    expect_error(ErrorType.FIELD_MISMATCH, PolyMatrix.from_rows, F3, [[Poly.x(F5)]])
    expect_error(ErrorType.FILE_ERROR, read_poly_matrix, F3, "/nonexistent/matrix.txt")


def test_smith_form_examples():
    print("🧪 Testing Smith normal form...")
    jordan = parse_poly_matrix(F3, "x; 1\n0; x")
    form = smith_normal_form(jordan)
    assert form.factors == (Poly.constant(F3, 1), parse_poly(F3, "x^2"))
    assert form.U @ jordan @ form.V == form.D

    x = Poly.x(F2)
    diagonal = PolyMatrix.diagonal(F2, [x * x, x])
    assert smith_normal_form(diagonal).factors == (x, x * x)

    coprime = PolyMatrix.diagonal(F3, [Poly.x(F3), Poly.x(F3) + 1])
    assert smith_normal_form(coprime).factors == (Poly.constant(F3, 1), parse_poly(F3, "x + x^2"))


def test_smith_form_rectangular_and_singular():
    wide = parse_poly_matrix(F2, "x; 0; 0\n0; x^2; 0")
    assert smith_normal_form(wide).factors == (Poly.x(F2), parse_poly(F2, "x^2"))
    ok, detail = check_smith_form(wide)
    assert ok, detail

    singular = parse_poly_matrix(F5, "x; x\nx; x")
    factors = smith_normal_form(singular).factors
    assert factors == (Poly.x(F5), Poly.zero(F5))
    zero = PolyMatrix.zeros(F5, 2, 3)
    assert smith_normal_form(zero).factors == (Poly.zero(F5), Poly.zero(F5))
    assert check_smith_form(zero)[0]


def test_smith_form_random_matrices():
    rng = random.Random(7)
    for i in range(40):
        field = (F2, F3, F5)[i % 3]
        matrix = random_poly_matrix(field, rng.randint(1, 3), rng.randint(1, 3), 2, rng)
        ok, detail = check_smith_form(matrix)
        assert ok, f"{detail}\n{matrix}"


def test_determinantal_divisors():
    jordan = parse_poly_matrix(F3, "x; 1\n0; x")
    assert determinantal_divisors(jordan) == [Poly.constant(F3, 1), parse_poly(F3, "x^2")]
    singular = parse_poly_matrix(F5, "x; x\nx; x")
    assert determinantal_divisors(singular) == [Poly.x(F5), Poly.zero(F5)]


def test_invariant_factor_partition():
    print("🧪 Testing invariant factor partitions...")
    x = Poly.x(F2)
    assert invariant_factor_partition(PolyMatrix.diagonal(F2, [x, x**3, 1])) == Partition.of(3, 1)
    assert invariant_factor_partition(PolyMatrix.identity(F2, 3)) == EMPTY
    # x+1 是单位以外的因子，但不贡献 x 的赋值
    coprime = PolyMatrix.diagonal(F3, [Poly.x(F3), Poly.x(F3) + 1])
    assert invariant_factor_partition(coprime) == Partition.of(1)
    expect_error(ErrorType.SINGULAR_MATRIX, invariant_factor_partition, parse_poly_matrix(F5, "x; x\nx; x"))
    expect_error(ErrorType.DIMENSION_MISMATCH, invariant_factor_partition, PolyMatrix.zeros(F5, 1, 2))


def test_horn_instance():
    print("🧪 Testing Horn instances for C = A·B...")
    x = Poly.x(F2)
    a = PolyMatrix.diagonal(F2, [x, 1])
    b = PolyMatrix.diagonal(F2, [1, x])
    instance = horn_instance(a, b)
    assert (instance.alpha, instance.beta, instance.gamma) == (Partition.of(1), Partition.of(1), Partition.of(1, 1))
    assert instance.product == PolyMatrix.diagonal(F2, [x, x])

    same = horn_instance(a, a)
    assert same.gamma == Partition.of(2)
    expect_error(ErrorType.DIMENSION_MISMATCH, horn_instance, a, PolyMatrix.identity(F2, 3))
    expect_error(ErrorType.FIELD_MISMATCH, horn_instance, a, PolyMatrix.identity(F3, 2))


def test_horn_instances_have_positive_lr():
    rng = random.Random(11)
    for field in (F2, F3):
        for _ in range(15):
            n = rng.randint(2, 3)
            a = random_x_power_matrix(field, n, 2, rng)
            b = random_x_power_matrix(field, n, 2, rng)
            instance = horn_instance(a, b)
            assert lr_coefficient(instance.alpha, instance.beta, instance.gamma) > 0


def test_quotient_matrix():
    f, g = parse_poly(F2, "1 + x^3"), parse_poly(F2, "x^2")
    phi = RationalFunction(f, g)
    matrix = quotient_matrix(phi)
    assert matrix == PolyMatrix.diagonal(F2, [Poly.x(F2), parse_poly(F2, "x^2")])
    assert invariant_factor_partition(matrix) == quotient_degree_partition(phi)


def main():
    """主测试函数"""
    print("🎯 Polynomial Matrix Test")
    print("=" * 50)

    tests = [(name, func) for name, func in globals().items() if name.startswith("test_") and callable(func)]
    test_results = []
    for test_name, test_func in tests:
        try:
            test_func()
            test_results.append((test_name, True))
        except Exception as e:
            print(f"  ❌ {test_name} crashed: {e}")
            test_results.append((test_name, False))

    print("\n" + "=" * 50)
    print("📊 Test Results Summary")
    passed = sum(1 for _, result in test_results if result)
    for test_name, result in test_results:
        status = "✅ PASS" if result else "❌ FAIL"
        print(f"  {status} {test_name}")
    print(f"\n🎯 Overall: {passed}/{len(test_results)} tests passed")
    return passed == len(test_results)


if __name__ == "__main__":
    main()
