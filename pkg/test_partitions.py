#!/usr/bin/env python3
"""
划分组合测试：枚举、共轭、Gauss 二项式、指标集与超单纯形
"""

from fractions import Fraction

from horn_codes.exception import ErrorType, HornCodesError
from horn_codes.formats import parse_partition
from horn_codes.partitions import (
    EMPTY,
    IndexSet,
    Partition,
    conjugate,
    dominates,
    hypersimplex_contains,
    is_prime_power,
    partition_count,
    partition_from_index_set,
    partitions_of,
    q_binomial,
)
from horn_codes.codes import count_subspaces
from horn_codes.finite_field import FieldSpec


def expect_error(error_type, func, *args, **kwargs):
    try:
        func(*args, **kwargs)
    except HornCodesError as e:
        assert e.error_type is error_type, f"期望 {error_type}，实际 {e.error_type}"
        return e
    raise AssertionError(f"期望抛出 {error_type}")


def test_partitions_of_order():
    print("🧪 Testing partition enumeration...")
    assert [str(p) for p in partitions_of(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert partitions_of(0) == [EMPTY]
    for n in range(11):
        shapes = partitions_of(n)
        assert len(shapes) == partition_count(n)
        assert len(set(shapes)) == len(shapes)
        assert all(p.size == n for p in shapes)
    assert partition_count(10) == 42
    expect_error(ErrorType.INPUT_ERROR, partitions_of, -1)


def test_partition_validation():
    print("🧪 Testing partition validation...")
    expect_error(ErrorType.INPUT_ERROR, Partition.of, 1, 2)
    expect_error(ErrorType.INPUT_ERROR, Partition.of, 2, 0)
    assert Partition.from_sequence([3, 1, 0, 0]) == Partition.of(3, 1)
    assert str(Partition.of(5, 3, 3, 1)) == "5,3,3,1"
    assert str(EMPTY) == "[]"


def test_partition_text_round_trip():
    for text in ["5,3,3,1", "1", "[]", "2,2,1"]:
        assert str(parse_partition(text)) == text
    expect_error(ErrorType.INPUT_ERROR, parse_partition, "a,1")
    expect_error(ErrorType.INPUT_ERROR, parse_partition, "1,2")


def test_conjugate():
    print("🧪 Testing conjugation...")
    assert conjugate(Partition.of(4, 2, 1)) == Partition.of(3, 2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    for n in range(8):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_dominance():
    assert dominates(Partition.of(3, 1), Partition.of(2, 2))
    assert not dominates(Partition.of(2, 2), Partition.of(3, 1))
    assert not dominates(Partition.of(3), Partition.of(2, 2))
    # 划分的枚举顺序与优势序相容
    shapes = partitions_of(6)
    for i, a in enumerate(shapes):
        for b in shapes[:i]:
            assert not dominates(a, b) or a == b


def test_q_binomial():
    print("🧪 Testing Gauss binomial...")
    assert q_binomial(3, 1, 2) == 35
    assert q_binomial(2, 0, 3) == 13
    for q in (2, 3, 4, 5):
        assert q_binomial(1, 0, q) == q + 1
    for q in (2, 3):
        for n in range(1, 4):
            for r in range(n + 1):
                if r < n:
                    assert q_binomial(n, r, q) == q_binomial(n, n - r - 1, q)
                assert q_binomial(n, r, q) == count_subspaces(FieldSpec.of_order(q), r + 1, n + 1)
    expect_error(ErrorType.INPUT_ERROR, q_binomial, 3, 1, 6)
    expect_error(ErrorType.INPUT_ERROR, q_binomial, 2, 3, 2)


def test_prime_powers():
    assert is_prime_power(9) and is_prime_power(2) and is_prime_power(64)
    assert not is_prime_power(6) and not is_prime_power(1) and not is_prime_power(12)


def test_partition_from_index_set():
    assert partition_from_index_set(IndexSet((1, 3), 4), 2) == Partition.of(1)
    assert partition_from_index_set(IndexSet((2, 4), 4), 2) == Partition.of(2, 1)
    assert partition_from_index_set(IndexSet((1, 2, 3), 3), 3) == EMPTY
    expect_error(ErrorType.INPUT_ERROR, partition_from_index_set, IndexSet((1, 2), 3), 3)
    expect_error(ErrorType.INPUT_ERROR, IndexSet, (2, 1), 3)
    expect_error(ErrorType.INPUT_ERROR, IndexSet, (1, 5), 4)


def test_hypersimplex():
    assert hypersimplex_contains([Fraction(1, 2), Fraction(1, 2), 1], 1, 3)
    assert hypersimplex_contains(["2/3", "2/3", "2/3"], 1, 3)
    assert not hypersimplex_contains(["1/2", "1/2", "1/2"], 1, 3)
    assert not hypersimplex_contains([Fraction(3, 2), Fraction(1, 2), 0], 1, 3)
    expect_error(ErrorType.INPUT_ERROR, hypersimplex_contains, [1, 1], 1, 3)


def main():
    """主测试函数"""
    print("🎯 Partition Combinatorics Test")
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
