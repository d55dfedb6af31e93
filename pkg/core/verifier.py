"""
验收校验器 - 每个验收条款对应一个套件
"""

import itertools
import logging
import math
import random
from typing import Dict, List, Tuple, Type

from termcolor import colored

from config import Config
from horn_codes.codes import (
    Divisor,
    count_subspaces,
    evaluation_code,
    grassmann_code_params,
    min_distance,
)
from horn_codes.finite_field import FieldSpec
from horn_codes.horn_sets import horn_lr_consistency, t_set, triple_partitions, u_set
from horn_codes.linalg import identity
from horn_codes.orbits import general_linear_generators, grassmann_orbit
from horn_codes.partitions import partitions_of, q_binomial
from horn_codes.poly_matrix import (
    PolyMatrix,
    determinantal_divisors,
    horn_instance,
    random_poly,
    random_poly_matrix,
    random_x_power_matrix,
    smith_normal_form,
)
from horn_codes.polynomials import (
    INFINITY,
    Poly,
    RationalFunction,
    continued_fraction_value,
    euclid_quotients,
    fiber,
    local_degree,
    poly_gcd,
)
from horn_codes.projective import (
    collineation_invariance_check,
    enumerate_projective_points,
    is_k_arc,
    max_collinear,
    nrc_points,
    vandermonde_product,
    veronese_map,
)
from horn_codes.symmetric_functions import (
    character_value,
    class_size,
    kronecker_coefficient,
    lr_coefficient,
    lr_coefficient_by_expansion,
    lr_product,
    matrix_product_experiment,
    schur_polynomial,
)
from horn_codes.types import SuiteReport

from .base import BaseSuite, CheckFn
from .golden_manager import APPENDIX_CASES, GoldenManager

logger = logging.getLogger(__name__)

Checks = List[Tuple[str, CheckFn]]

# 4 <= q <= 9 的全部域阶，含扩域 GF(4)、GF(8)、GF(9)
SMALL_FIELD_ORDERS = (4, 5, 7, 8, 9)


class AppendixSuite(BaseSuite):
    """附录三元组表逐元素复现"""

    name = "appendix"

    def checks(self) -> Checks:
        manager = GoldenManager(self.config)

        def case(kind: str, n: int, r: int) -> CheckFn:
            def check():
                result = manager.check_case(kind, n, r)
                return result.passed, result.detail
            return check

        return [(f"{kind}_{n}_{r}", case(kind, n, r)) for n, r in APPENDIX_CASES for kind in ("U", "T")]


class HornLRSuite(BaseSuite):
    """T 中三元组的 LR 系数为正，U∖T 中为零"""

    name = "horn-lr"

    def checks(self) -> Checks:
        def case(n: int, r: int) -> CheckFn:
            def check():
                report = horn_lr_consistency(n, r)
                subset = set(t_set(n, r)) <= set(u_set(n, r))
                sizes = all(
                    lam.size + mu.size == nu.size
                    for lam, mu, nu in map(triple_partitions, u_set(n, r))
                )
                detail = f"|T|={len(report.t_entries)}, |U∖T|={len(report.complement_entries)}"
                if r == 1 and report.complement_entries:
                    return False, detail + "，r = 1 时 U∖T 应为空"
                return report.consistent and subset and sizes, detail
            return check

        return [
            (f"n={n},r={r}", case(n, r))
            for n in range(2, self.config.horn_lr_max_n + 1)
            for r in range(1, n)
        ]


class LROracleSuite(BaseSuite):
    """LR 表计数与 Schur 多项式展开一致"""

    name = "lr-oracle"

    def checks(self) -> Checks:
        def oracle(size: int) -> CheckFn:
            def check():
                mismatches = []
                total = 0
                for nu in partitions_of(size):
                    for a in range(size + 1):
                        for lam in partitions_of(a):
                            for mu in partitions_of(size - a):
                                total += 1
                                if lr_coefficient(lam, mu, nu) != lr_coefficient_by_expansion(lam, mu, nu):
                                    mismatches.append(f"({lam};{mu};{nu})")
                return not mismatches, f"{total} 个三元组，不一致 {mismatches[:5]}"
            return check

        def symmetry(size: int) -> CheckFn:
            def check():
                for nu in partitions_of(size):
                    for a in range(size + 1):
                        for lam in partitions_of(a):
                            for mu in partitions_of(size - a):
                                if lr_coefficient(lam, mu, nu) != lr_coefficient(mu, lam, nu):
                                    return False, f"c^{nu}_{{{lam},{mu}}} 不对称"
                return True, "c^ν_{λμ} = c^ν_{μλ}"
            return check

        def completeness(size: int) -> CheckFn:
            def check():
                for a in range(size + 1):
                    for lam in partitions_of(a):
                        for mu in partitions_of(size - a):
                            m = max(size, 1)
                            remainder = schur_polynomial(lam, m) * schur_polynomial(mu, m)
                            for nu, c in lr_product(lam, mu).items():
                                remainder = remainder - schur_polynomial(nu, m).scale(c)
                            if not remainder.is_zero():
                                return False, f"s_{lam}·s_{mu} 展开有余项"
                return True, "s_λ·s_μ - Σ c s_ν = 0"
            return check

        checks = [(f"oracle |ν|={size}", oracle(size)) for size in range(self.config.lr_oracle_max_size + 1)]
        checks += [(f"symmetry |ν|={size}", symmetry(size)) for size in range(1, 7)]
        checks += [(f"completeness |ν|={size}", completeness(size)) for size in range(1, 5)]
        return checks


class KroneckerSuite(BaseSuite):
    """Kronecker 系数的对称性、与平凡表示配对，以及特征标正交性"""

    name = "kronecker"

    def checks(self) -> Checks:
        def symmetry(n: int) -> CheckFn:
            def check():
                shapes = partitions_of(n)
                for triple in itertools.product(shapes, repeat=3):
                    value = kronecker_coefficient(*triple)
                    for perm in itertools.permutations(triple):
                        if kronecker_coefficient(*perm) != value:
                            return False, f"k{triple} 在置换下不变性失败"
                return True, f"{len(shapes) ** 3} 个三元组"
            return check

        def trivial(n: int) -> CheckFn:
            def check():
                row = partitions_of(n)[0]
                for lam in partitions_of(n):
                    for mu in partitions_of(n):
                        if kronecker_coefficient(lam, mu, row) != int(lam == mu):
                            return False, f"k({lam},{mu},({n})) ≠ δ"
                return True, "k_{λμ(n)} = δ_{λμ}"
            return check

        def orthogonality(n: int) -> CheckFn:
            def check():
                shapes = partitions_of(n)
                for lam in shapes:
                    for mu in shapes:
                        total = sum(
                            class_size(rho) * character_value(lam, rho) * character_value(mu, rho)
                            for rho in shapes
                        )
                        if total != math.factorial(n) * int(lam == mu):
                            return False, f"⟨χ_{lam}, χ_{mu}⟩ = {total}"
                return True, f"{len(shapes)} 个不可约特征标"
            return check

        checks = [(f"symmetry n={n}", symmetry(n)) for n in range(1, self.config.kronecker_max_n + 1)]
        checks += [(f"trivial n={n}", trivial(n)) for n in range(1, self.config.orthogonality_max_n + 1)]
        checks += [(f"orthogonality n={n}", orthogonality(n)) for n in range(1, self.config.orthogonality_max_n + 1)]
        return checks


class ExperimentSuite(BaseSuite):
    """三维矩阵乘积实验：只检查报告确定且完整"""

    name = "experiment"

    def checks(self) -> Checks:
        def case(nu) -> CheckFn:
            def check():
                first_matrix, first = matrix_product_experiment(nu)
                second_matrix, second = matrix_product_experiment(nu)
                size = len(partitions_of(nu.size))
                complete = {c.name for c in first.conventions} == {"literal", "stretched"} and all(
                    len(c.product) == size and all(len(row) == size for row in c.product)
                    for c in first.conventions
                )
                deterministic = first == second and (first_matrix == second_matrix).all()
                flags = ", ".join(f"{c.name}={'I' if c.is_identity else '≠I'}" for c in first.conventions)
                return complete and deterministic, flags
            return check

        return [(f"ν={nu}", case(nu)) for n in range(1, 5) for nu in partitions_of(n)]


class HornProductSuite(BaseSuite):
    """随机 x 幂矩阵乘积：|γ| = |α| + |β| 且 c^γ_{αβ} > 0"""

    name = "horn-product"

    def checks(self) -> Checks:
        rng = random.Random(self.config.seed)
        fields = [FieldSpec(2), FieldSpec(3)]
        samples = []
        for i in range(self.config.horn_product_samples):
            field = fields[i % len(fields)]
            size = rng.choice([2, 3])
            a = random_x_power_matrix(field, size, 3, rng)
            b = random_x_power_matrix(field, size, 3, rng)
            samples.append((i, field, size, a, b))

        def case(a: PolyMatrix, b: PolyMatrix) -> CheckFn:
            def check():
                instance = horn_instance(a, b)
                c = lr_coefficient(instance.alpha, instance.beta, instance.gamma)
                sizes = instance.gamma.size == instance.alpha.size + instance.beta.size
                return sizes and c > 0, f"α={instance.alpha} β={instance.beta} γ={instance.gamma} c={c}"
            return check

        return [(f"#{i} GF({field.q}) {size}x{size}", case(a, b)) for i, field, size, a, b in samples]


def check_smith_form(matrix: PolyMatrix) -> Tuple[bool, str]:
    """U·A·V = D 对角、整除链、U/V 幺模、行列式因子一致"""
    form = smith_normal_form(matrix)
    if form.U @ matrix @ form.V != form.D:
        return False, "U·A·V ≠ D"
    if not form.D.is_diagonal() or list(form.D.diagonal_entries()) != list(form.factors):
        return False, "D 不是以不变因子为对角线的对角阵"
    for d, e in zip(form.factors, form.factors[1:]):
        if not d.divides(e):
            return False, f"{d} 不整除 {e}"
    for name, t in (("U", form.U), ("V", form.V)):
        det = t.determinant()
        if det.degree != 0:
            return False, f"det({name}) = {det} 不是非零常数"
    running = Poly.constant(matrix.field, 1)
    for i, (d, delta) in enumerate(zip(form.factors, determinantal_divisors(matrix)), start=1):
        running = running * d
        if running.monic() != delta:
            return False, f"d_1···d_{i} = {running} 与 {i} 阶子式 gcd {delta} 不符"
    if matrix.is_square():
        product = Poly.constant(matrix.field, 1)
        for d in form.factors:
            product = product * d
        if product != matrix.determinant().monic():
            return False, "不变因子乘积与 det(A) 不相伴"
    return True, f"{matrix.shape[0]}x{matrix.shape[1]}"


class SmithFormSuite(BaseSuite):
    """随机多项式矩阵的 Smith 标准形"""

    name = "snf"

    def checks(self) -> Checks:
        rng = random.Random(self.config.seed)
        fields = [FieldSpec(2), FieldSpec(3), FieldSpec(5)]
        samples = []
        for i in range(self.config.snf_samples):
            field = fields[i % len(fields)]
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            samples.append((i, field, random_poly_matrix(field, m, n, 3, rng)))
        checks = [("identity", lambda: check_smith_form(PolyMatrix.identity(FieldSpec(2), 3)))]
        checks += [
            (f"#{i} GF({field.q}) {a.shape[0]}x{a.shape[1]}", lambda a=a: check_smith_form(a))
            for i, field, a in samples
        ]
        return checks


class EuclidSuite(BaseSuite):
    """连分数重建 f/g"""

    name = "euclid"

    def checks(self) -> Checks:
        rng = random.Random(self.config.seed)
        fields = [FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(2, 2)]

        def case(field: FieldSpec) -> CheckFn:
            def check():
                for _ in range(self.config.euclid_samples):
                    f = random_poly(field, 6, rng, nonzero=True)
                    g = random_poly(field, 6, rng, nonzero=True)
                    if f.degree < g.degree:
                        f, g = g, f
                    rebuilt = continued_fraction_value(euclid_quotients(f, g))
                    if rebuilt != RationalFunction(f, g):
                        return False, f"f = {f}, g = {g}"
                return True, f"{self.config.euclid_samples} 对"
            return check

        return [(f"GF({field.q})", case(field)) for field in fields]

    def run_batch(self, checks: Checks):
        return [self.run_check(name, check) for name, check in checks]


class MDSSuite(BaseSuite):
    """D = k·[∞] 在全部有限点求值的码满足 d = n - k + 1"""

    name = "mds"

    def checks(self) -> Checks:
        def case(q: int, k: int) -> CheckFn:
            def check():
                field = FieldSpec.of_order(q)
                code = evaluation_code(Divisor(field, {INFINITY: k}), field.elements())
                d = min_distance(code, bound=self.config.exhaustion_bound)
                expected = code.length - code.dimension + 1
                return d == expected, f"[{code.length},{code.dimension},{d}]"
            return check

        return [
            (f"q={q},k={k}", case(q, k))
            for q in (2, 3, *SMALL_FIELD_ORDERS)
            for k in range(q)
            if q ** (k + 1) <= self.config.exhaustion_bound
        ]


class ArcsSuite(BaseSuite):
    """正规有理曲线：点数、弧性质、共线数、直射不变性"""

    name = "arcs"

    def checks(self) -> Checks:
        def count(n: int, q: int) -> CheckFn:
            def check():
                points = nrc_points(n, q)
                distinct = len({p.key() for p in points})
                return len(points) == q + 1 == distinct, f"{len(points)} 个点"
            return check

        def arc(n: int, q: int) -> CheckFn:
            def check():
                return is_k_arc(nrc_points(n, q)), f"({q + 1})-弧"
            return check

        def vandermonde(q: int) -> CheckFn:
            def check():
                field = FieldSpec.of_order(q)
                xs = field.elements()
                for n in [m for m in (2, 3) if m + 2 <= q]:
                    curve = nrc_points(n, field)
                    for subset in itertools.combinations(xs, n + 1):
                        points = [curve[x.index] for x in subset]
                        if is_k_arc(points) != bool(vandermonde_product(list(subset))):
                            return False, f"n={n} 子集 {[str(x) for x in subset]}"
                return True, "秩判定与 Vandermonde 行列式一致"
            return check

        def conic(p: int) -> CheckFn:
            def check():
                r = max_collinear(nrc_points(2, p))
                return r == 2, f"max collinear = {r}"
            return check

        def collineation(n: int, q: int) -> CheckFn:
            def check():
                report = collineation_invariance_check(n, q)
                return report.all_preserved, f"{len(report.diagonal)} 个对角直射 + 反转"
            return check

        def veronese(q: int, d: int) -> CheckFn:
            def check():
                field = FieldSpec.of_order(q)
                image = {veronese_map(p, d).key() for p in enumerate_projective_points(field, 1)}
                return image == {p.key() for p in nrc_points(d, field)}, f"d={d}"
            return check

        checks = [(f"count n={n},q={q}", count(n, q)) for n in (1, 2, 3) for q in (2, 3, 4, 5)]
        checks += [
            (f"arc n={n},q={q}", arc(n, q))
            for n in (2, 3, 4)
            for q in (4, 5, 7, 8, 9)
            if q >= n + 2
        ]
        checks += [(f"vandermonde q={q}", vandermonde(q)) for q in SMALL_FIELD_ORDERS]
        checks += [(f"conic p={p}", conic(p)) for p in (3, 5, 7)]
        checks += [(f"collineation n={n},q={q}", collineation(n, q)) for n in (2, 3) for q in (3, 4, 5)]
        checks += [(f"veronese q={q},d={d}", veronese(q, d)) for q in (2, 3, 5) for d in (2, 3, 4)]
        return checks


class GrassmannSuite(BaseSuite):
    """Gauss 二项式与子空间穷举计数一致；两种维数只报告"""

    name = "grassmann"

    def checks(self) -> Checks:
        def length(n: int, r: int, q: int) -> CheckFn:
            def check():
                expected = q_binomial(n, r, q)
                counted = count_subspaces(FieldSpec.of_order(q), r + 1, n + 1)
                detail = f"length={expected}"
                if q == 2 and n <= 3:
                    params = grassmann_code_params(n, r, q, bound=self.config.exhaustion_bound)
                    detail += f", dim C(n,r)={params.dimension_binomial}, Plücker 秩={params.dimension_bruteforce}"
                return expected == counted, detail
            return check

        def orbit(n: int, k: int) -> CheckFn:
            def check():
                field = FieldSpec(2)
                start = identity(field, n)[:k]
                size = len(grassmann_orbit(start, general_linear_generators(field, n)))
                return size == q_binomial(n - 1, k - 1, 2), f"轨道大小 {size}"
            return check

        checks = [
            (f"length n={n},r={r},q={q}", length(n, r, q))
            for q in (2, 3)
            for n in range(1, 5)
            for r in range(n + 1)
        ]
        checks += [(f"GL orbit n={n},k={k}", orbit(n, k)) for n in range(2, 5) for k in range(1, n)]
        return checks


def split_rational_map(field: FieldSpec, degree: int, rng: random.Random) -> Tuple[RationalFunction, object]:
    """φ = (h + y0·g) / g，h 在 field 上分裂、deg g < deg h，使 φ^{-1}(y0) 全为有理点"""
    while True:
        roots = [field.from_index(rng.randrange(field.q)) for _ in range(degree)]
        h = Poly.from_roots(field, roots)
        g = random_poly(field, degree - 1, rng, nonzero=True)
        if poly_gcd(h, g).degree != 0:
            continue
        y0 = field.from_index(rng.randrange(field.q))
        return RationalFunction(h + g.scale(y0), g), y0


class LocalDegreeSuite(BaseSuite):
    """一般值的纤维上局部次数之和等于 deg φ"""

    name = "local-degree"

    def checks(self) -> Checks:
        rng = random.Random(self.config.seed)
        fields = [FieldSpec.of_order(q) for q in (4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64)]
        samples = []
        for i in range(self.config.local_degree_samples):
            field = fields[i % len(fields)]
            phi, y0 = split_rational_map(field, rng.randint(1, 4), rng)
            samples.append((i, phi, y0))

        def case(phi: RationalFunction, y0) -> CheckFn:
            def check():
                total = sum(local_degree(phi, x) for x in fiber(phi, y0))
                inverse = phi.reciprocal()
                target = INFINITY if y0.is_zero() else y0.inverse()
                total_inverse = sum(local_degree(inverse, x) for x in fiber(inverse, target))
                passed = total == phi.degree == total_inverse
                return passed, f"deg φ = {phi.degree}, Σ m = {total}, Σ m(1/φ) = {total_inverse}"
            return check

        return [(f"#{i} GF({phi.field.q}) deg {phi.degree}", case(phi, y0)) for i, phi, y0 in samples]


SUITES: Dict[str, Type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        AppendixSuite,
        HornLRSuite,
        LROracleSuite,
        KroneckerSuite,
        ExperimentSuite,
        HornProductSuite,
        SmithFormSuite,
        EuclidSuite,
        MDSSuite,
        ArcsSuite,
        GrassmannSuite,
        LocalDegreeSuite,
    )
}


class AcceptanceVerifier:
    """按名称运行验收套件；all 依次运行全部套件"""

    def __init__(self, config: Config, show_progress: bool = True):
        self.config = config
        self.show_progress = show_progress

    @staticmethod
    def suite_names() -> List[str]:
        return [*SUITES, "all"]

    def run(self, suite: str) -> List[SuiteReport]:
        names = list(SUITES) if suite == "all" else [suite]
        reports = []
        for name in names:
            reports.append(SUITES[name](self.config, show_progress=self.show_progress).run())
        return reports


def format_report(report: SuiteReport) -> str:
    """每项检查一行 PASS/FAIL"""
    lines = []
    for check in report.checks:
        tag = colored("PASS", "green") if check.passed else colored("FAIL", "red")
        lines.append(f"{tag} {report.suite} {check.name} {check.detail}".rstrip())
    summary = report.summary()
    lines.append(f"📊 {report.suite}: {summary['passed']}/{summary['total']} 通过")
    return "\n".join(lines)
