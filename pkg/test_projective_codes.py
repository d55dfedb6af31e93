#!/usr/bin/env python3
"""
射影几何与码测试：NRC 与弧、Ω/Ψ 闭包、求值码、三点码、Grassmann 码与轨道码
"""

import itertools
import random

from config import Config
from core.verifier import ArcsSuite, MDSSuite
from horn_codes.codes import (
    Divisor,
    LinearCode,
    count_subspaces,
    direct_sum,
    direct_sum_code,
    evaluation_code,
    grassmann_code,
    grassmann_code_params,
    min_distance,
    rational_map_code,
    riemann_roch_basis,
    three_point_code,
    weight_distribution,
)
from horn_codes.exception import ErrorType, HornCodesError
from horn_codes.finite_field import FieldSpec
from horn_codes.formats import format_code, parse_divisor, parse_point
from horn_codes.linalg import to_matrix
from horn_codes.orbits import (
    Subspace,
    configuration_orbits,
    general_linear_generators,
    grassmann_orbit,
    orbit_min_distance,
    subspace_distance,
)
from horn_codes.polynomials import INFINITY, Poly, RationalFunction
from horn_codes.projective import (
    ProjectivePoint,
    collineation_invariance_check,
    enumerate_projective_points,
    is_k_arc,
    lucas_binomial_mod,
    max_collinear,
    nrc_points,
    omega_closure,
    omega_set,
    psi_closure,
    vandermonde_product,
    veronese_map,
)

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


def test_projective_points():
    print("🧪 Testing projective points...")
    assert len(enumerate_projective_points(F3, 2)) == 13
    assert len(enumerate_projective_points(FieldSpec(2, 2), 3)) == 85
    assert ProjectivePoint.of(F5, (2, 4, 0)) == ProjectivePoint.of(F5, (1, 2, 0))
    assert str(ProjectivePoint.of(F5, (0, 3, 1))) == "(0:1:2)"
    assert parse_point(F5, "(1:2:0)") == ProjectivePoint.of(F5, (1, 2, 0))
    expect_error(ErrorType.INPUT_ERROR, ProjectivePoint.of, F5, (0, 0, 0))
    expect_error(ErrorType.INPUT_ERROR, parse_point, F5, "1:2:0")


def test_nrc_is_arc():
    print("🧪 Testing normal rational curves and arcs...")
    for n, q in [(2, 4), (2, 5), (3, 5), (3, 7), (4, 7)]:
        points = nrc_points(n, q)
        assert len(points) == q + 1
        assert is_k_arc(points), f"n={n}, q={q}"
    assert max_collinear(nrc_points(2, 5)) == 2
    expect_error(ErrorType.INPUT_ERROR, nrc_points, 0, 5)


def test_non_arcs_and_collinearity():
    line = [ProjectivePoint.of(F3, c) for c in [(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 1, 0)]]
    assert not is_k_arc(line)
    assert max_collinear(line) == 4
    assert max_collinear(line + line) == 4
    assert max_collinear(line[:1]) == 1
    expect_error(ErrorType.INPUT_ERROR, max_collinear, [])
    expect_error(ErrorType.DIMENSION_MISMATCH, max_collinear, nrc_points(3, 5))
    expect_error(ErrorType.DIMENSION_MISMATCH, is_k_arc, [line[0], ProjectivePoint.of(F3, (1, 1))])


def test_vandermonde():
    xs = [F5.element(v) for v in (1, 2, 3)]
    assert vandermonde_product(xs) == F5.element(2)
    assert vandermonde_product([F5.element(1), F5.element(1)]).is_zero()
    expect_error(ErrorType.INPUT_ERROR, vandermonde_product, [])


def test_vandermonde_oracle_over_extension_fields():
    print("🧪 Testing Vandermonde oracle over GF(8), GF(9)...")
    suite = ArcsSuite(Config(), show_progress=False)
    selected = [(name, check) for name, check in suite.checks() if name in ("vandermonde q=8", "vandermonde q=9")]
    assert len(selected) == 2
    for name, check in selected:
        result = suite.run_check(name, check)
        assert result.passed, result.detail

    F9 = FieldSpec.of_order(9)
    alpha = F9.generator()
    curve = nrc_points(2, F9)
    repeated = [alpha, alpha, F9.one()]
    assert vandermonde_product(repeated).is_zero()
    assert not is_k_arc([curve[x.index] for x in repeated])
    distinct = [alpha, alpha + F9.one(), F9.zero()]
    assert not vandermonde_product(distinct).is_zero()
    assert is_k_arc([curve[x.index] for x in distinct])


def test_small_field_suites_cover_extension_fields():
    names = [name for name, _ in MDSSuite(Config(exhaustion_bound=10**6), show_progress=False).checks()]
    assert "q=4,k=3" in names and "q=8,k=5" in names and "q=9,k=5" in names
    assert "q=9,k=6" not in names
    arcs = [name for name, _ in ArcsSuite(Config(), show_progress=False).checks()]
    assert [name for name in arcs if name.startswith("vandermonde")] == [
        "vandermonde q=4", "vandermonde q=5", "vandermonde q=7", "vandermonde q=8", "vandermonde q=9",
    ]


def test_veronese_image_is_nrc():
    for d, q in [(2, 5), (3, 4), (4, 7)]:
        field = FieldSpec.of_order(q)
        line = enumerate_projective_points(field, 1)
        images = {veronese_map(p, d).key() for p in line}
        assert images == {p.key() for p in nrc_points(d, field)}
    expect_error(ErrorType.DIMENSION_MISMATCH, veronese_map, ProjectivePoint.of(F5, (1, 0, 0)), 2)
    expect_error(ErrorType.INPUT_ERROR, veronese_map, ProjectivePoint.of(F5, (1, 0)), 0)


def test_collineations_preserve_nrc():
    report = collineation_invariance_check(3, 5)
    assert report.point_count == 6
    assert len(report.diagonal) == 4
    assert report.reversal_preserved and report.all_preserved


def test_omega_and_psi():
    print("🧪 Testing closure operators...")
    assert lucas_binomial_mod(10, 3, 3) == 0
    assert lucas_binomial_mod(7, 2, 5) == 1
    assert omega_set(0, 4, 2) == {0, 1, 2, 3, 4}
    assert omega_set(1, 4, 2) == {1, 3}
    assert omega_closure({1, 2}, 4, 2) == {1, 2, 3}
    assert omega_closure(set(), 4, 2) == set()
    assert psi_closure({1}, 4) == {1, 3}
    assert psi_closure({2}, 4) == {2}
    expect_error(ErrorType.INPUT_ERROR, omega_set, 5, 4, 2)
    expect_error(ErrorType.INPUT_ERROR, psi_closure, {5}, 4)


def test_closures_are_closure_operators():
    for n in range(7):
        for size in range(n + 2):
            for J in itertools.combinations(range(n + 1), size):
                J = set(J)
                for p in (2, 3):
                    closed = omega_closure(J, n, p)
                    assert J <= closed and omega_closure(closed, n, p) == closed
                closed = psi_closure(J, n)
                assert J <= closed and psi_closure(closed, n) == closed


def test_divisors():
    divisor = Divisor(F5, ((0, 1), (0, 1), (INFINITY, 1)))
    assert divisor.degree == 3
    assert divisor.multiplicity(F5.zero()) == 2
    assert divisor.support == [F5.zero(), INFINITY]
    assert Divisor(F5, ((1, 1), (1, -1))).support == []
    text = str(Divisor(F5, {3: -1, INFINITY: 2}))
    assert text == "-1*[3] + 2*[inf]"
    assert parse_divisor(F5, text) == Divisor(F5, {3: -1, INFINITY: 2})
    assert str(Divisor(F5, {})) == "0"


def test_riemann_roch_basis():
    x = Poly.x(F5)
    basis = riemann_roch_basis(Divisor(F5, {INFINITY: 2}))
    assert [str(b) for b in basis] == ["1", "x", "x^2"]
    at_zero = riemann_roch_basis(Divisor(F5, {0: 1}))
    assert at_zero == [RationalFunction(Poly.constant(F5, 1), x), RationalFunction.from_poly(Poly.constant(F5, 1))]
    assert riemann_roch_basis(Divisor(F5, {INFINITY: -1})) == []


def test_riemann_roch_dimension_law():
    rng = random.Random(3)
    F7 = FieldSpec(7)
    points = [*F7.elements(), INFINITY]
    for _ in range(200):
        target = rng.randint(-3, 6)
        chosen = rng.sample(points, 3)
        first, second = rng.randint(-3, 3), rng.randint(-3, 3)
        divisor = Divisor(F7, ((chosen[0], first), (chosen[1], second), (chosen[2], target - first - second)))
        assert divisor.degree == target
        assert len(riemann_roch_basis(divisor)) == max(target + 1, 0)


def test_evaluation_code_is_mds():
    print("🧪 Testing evaluation codes...")
    for k in range(5):
        code = evaluation_code(Divisor(F5, {INFINITY: k}), F5.elements())
        assert code.length == 5 and code.dimension == k + 1
        assert min_distance(code) == 5 - k
    code = evaluation_code(Divisor(F5, {INFINITY: 2}), F5.elements())
    assert weight_distribution(code) == [1, 0, 0, 40, 40, 44]
    assert format_code(code).splitlines()[0] == "5 3 3 5"


def test_evaluation_code_errors():
    divisor = Divisor(F5, {0: 1})
    expect_error(ErrorType.SUPPORT_COLLISION, evaluation_code, divisor, F5.elements())
    expect_error(ErrorType.INPUT_ERROR, evaluation_code, divisor, [F5.one(), F5.one()])
    expect_error(ErrorType.INPUT_ERROR, evaluation_code, divisor, [])
    inverse_x = RationalFunction(Poly.constant(F5, 1), Poly.x(F5))
    expect_error(ErrorType.POLE_AT_POINT, rational_map_code, inverse_x, [F5.one(), F5.zero()])
    assert rational_map_code(inverse_x, [F5.element(2), INFINITY]) == (F5.element(3), F5.zero())


def test_three_point_code():
    code = three_point_code(1, 1, 1, 4, 3)
    assert code.field.q == 9
    assert (code.length, code.dimension) == (7, 4)
    assert code.min_distance == 4
    expect_error(ErrorType.DIVISIBILITY_ERROR, three_point_code, 1, 1, 1, 3, 3)
    expect_error(ErrorType.INPUT_ERROR, three_point_code, 1, 1, 1, 0, 3)


def test_direct_sum_codes():
    print("🧪 Testing direct sums of line-bundle codes...")
    divisors = [Divisor(F5, {INFINITY: 1}), Divisor(F5, {INFINITY: 2})]
    parts = [evaluation_code(d, F5.elements()) for d in divisors]
    code = direct_sum_code(divisors, F5.elements())
    assert code.length == 2 * 5
    assert code.dimension == sum(part.dimension for part in parts) == 5
    assert min_distance(code) == min(min_distance(part) for part in parts) == 3

    # 默认求值点：支撑 {∞} 之外的 5 个点
    assert direct_sum_code(divisors) == code

    F7 = FieldSpec(7)
    mixed = [Divisor(F7, {0: 1, INFINITY: 1}), Divisor(F7, {INFINITY: 3}), Divisor(F7, {0: -1})]
    code = direct_sum_code(mixed)
    assert code.length == 3 * 6
    assert code.dimension == 3 + 4 + 0
    assert min_distance(code) == min(4, 3)

    empty = direct_sum_code([Divisor(F5, {INFINITY: -1}), Divisor(F5, {INFINITY: 0})], F5.elements())
    assert (empty.length, empty.dimension, min_distance(empty)) == (10, 1, 5)

    expect_error(ErrorType.SUPPORT_COLLISION, direct_sum_code, [Divisor(F5, {0: 1})], F5.elements())
    expect_error(ErrorType.INPUT_ERROR, direct_sum_code, [])
    expect_error(ErrorType.INPUT_ERROR, direct_sum, [])
    expect_error(ErrorType.FIELD_MISMATCH, direct_sum_code, [divisors[0], Divisor(F7, {INFINITY: 1})])


def test_exhaustion_limits():
    code = evaluation_code(Divisor(F5, {INFINITY: 2}), F5.elements())
    expect_error(ErrorType.EXHAUSTION_LIMIT, min_distance, code, bound=100)
    assert min_distance(code, max_concurrency=1) == 3
    expect_error(ErrorType.INPUT_ERROR, min_distance, LinearCode(F5, 3))


def test_grassmann_codes():
    print("🧪 Testing Grassmann codes...")
    params = grassmann_code_params(3, 1, 2)
    assert params.length == 35
    assert params.dimension_binomial == 3
    assert params.dimension_bruteforce == 6
    assert grassmann_code(3, 1, 2).min_distance == 16
    assert grassmann_code_params(2, 0, 2).length == 7
    assert grassmann_code_params(4, 2, 3, bruteforce=False).dimension_bruteforce is None
    expect_error(ErrorType.INPUT_ERROR, grassmann_code_params, 2, 3, 2)
    expect_error(ErrorType.EXHAUSTION_LIMIT, grassmann_code_params, 3, 1, 2, bound=10)
    assert count_subspaces(F3, 2, 3) == 13


def test_grassmann_orbits():
    print("🧪 Testing orbit codes...")
    generators = general_linear_generators(F2, 2)
    orbit = grassmann_orbit(to_matrix(F2, [[1, 0]]), generators)
    assert len(orbit) == 3
    assert orbit_min_distance(orbit) == 2
    big = grassmann_orbit(to_matrix(F3, [[1, 0, 0]]), general_linear_generators(F3, 3))
    assert len(big) == 13
    planes = grassmann_orbit(to_matrix(F2, [[1, 0, 0, 0], [0, 1, 0, 0]]), general_linear_generators(F2, 4))
    assert len(planes) == 35
    assert orbit_min_distance(planes) == 2


def test_orbit_errors():
    generators = general_linear_generators(F2, 2)
    expect_error(ErrorType.INPUT_ERROR, grassmann_orbit, to_matrix(F2, [[1, 1], [1, 1]]), generators)
    expect_error(ErrorType.SINGULAR_MATRIX, grassmann_orbit, to_matrix(F2, [[1, 0]]), [to_matrix(F2, [[1, 0], [0, 0]])])
    expect_error(ErrorType.DIMENSION_MISMATCH, grassmann_orbit, to_matrix(F2, [[1, 0]]), general_linear_generators(F2, 3))
    single = {Subspace.span(F2, [[1, 0]])}
    expect_error(ErrorType.INPUT_ERROR, orbit_min_distance, single)


def test_subspace_distance():
    a = Subspace.span(F3, [[1, 0, 0]])
    b = Subspace.span(F3, [[0, 1, 0]])
    plane = Subspace.span(F3, [[1, 0, 0], [0, 1, 0]])
    assert subspace_distance(a, b) == 2
    assert subspace_distance(a, plane) == 1
    assert subspace_distance(plane, Subspace.span(F3, [[2, 2, 0], [1, 0, 0]])) == 0
    expect_error(ErrorType.DIMENSION_MISMATCH, subspace_distance, a, Subspace.span(F3, [[1, 0]]))


def test_configuration_orbits():
    rotation = [[2, 3, 1]]
    assert len(configuration_orbits(("a", "b", "c"), rotation, ordered=True)) == 3
    assert configuration_orbits(("a", "b", "c"), rotation) == {("a", "b", "c")}
    swaps = [[2, 1, 3], [1, 3, 2]]
    assert len(configuration_orbits(("a", "a", "b"), swaps, ordered=True)) == 3
    expect_error(ErrorType.INPUT_ERROR, configuration_orbits, ("a", "b", "c"), [[1, 1, 3]])


def main():
    """主测试函数"""
    print("🎯 Projective Geometry & Codes Test")
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
