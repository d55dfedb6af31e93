#!/usr/bin/env python3
"""
horn-codes 主程序入口
划分组合、Horn 三元组、有限域多项式矩阵与求值码的统一命令行
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional, Sequence

import click

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent))

from config import config
from core import AcceptanceVerifier, GoldenManager, format_report
from horn_codes.codes import (
    LinearCode,
    direct_sum_code,
    evaluation_code,
    grassmann_code_params,
    min_distance,
    rational_map_code,
    riemann_roch_basis,
    three_point_code,
    weight_distribution,
)
from horn_codes.exception import ErrorType, HornCodesError
from horn_codes.finite_field import FieldOp, FieldSpec, field_arithmetic
from horn_codes.formats import (
    format_field_element,
    format_poly_matrix,
    parse_divisor,
    parse_field_element,
    parse_field_spec,
    parse_index_set,
    parse_p1_point,
    parse_partition,
    parse_point,
    parse_poly,
    parse_rational_function,
    parse_rational_vector,
    read_field_matrix,
    read_poly_matrix,
)
from horn_codes.horn_sets import format_triple, horn_lr_consistency, t_set, u_set
from horn_codes.linalg import to_matrix
from horn_codes.orbits import (
    configuration_orbits,
    general_linear_generators,
    grassmann_orbit,
    orbit_min_distance,
)
from horn_codes.partitions import (
    Partition,
    conjugate,
    hypersimplex_contains,
    partition_count,
    partition_from_index_set,
    partitions_of,
    q_binomial,
)
from horn_codes.poly_matrix import (
    PolyMatrix,
    horn_instance,
    invariant_factor_partition,
    quotient_matrix,
    smith_normal_form,
)
from horn_codes.polynomials import (
    INFINITY,
    continued_fraction_value,
    euclid_quotients,
    fiber,
    local_degree,
    projective_line,
    quotient_degree_partition,
)
from horn_codes.projective import (
    collineation_invariance_check,
    is_k_arc,
    max_collinear,
    nrc_points,
    omega_closure,
    psi_closure,
    vandermonde_product,
    veronese_map,
)
from horn_codes.symmetric_functions import (
    CycleType,
    SliceKind,
    character_table,
    character_value,
    coefficient_matrix_slice,
    kronecker_coefficient,
    lr_coefficient,
    lr_product,
    lr_support,
    matrix_product_experiment,
    rectangular_coefficients,
    schur_polynomial,
)
from horn_codes.types import CommandResult
from utils import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3


@dataclass
class CliState:
    """一次调用的输出状态"""
    json_output: bool = False
    field: Optional[FieldSpec] = None
    command: str = ""
    result: Optional[CommandResult] = None
    text: str = ""


# ---------- 参数类型 ----------

class PartitionType(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return parse_partition(value)
        except HornCodesError as e:
            self.fail(e.short_message, param, ctx)


class FieldType(click.ParamType):
    name = "field"

    def convert(self, value, param, ctx):
        if isinstance(value, FieldSpec):
            return value
        try:
            return parse_field_spec(value)
        except HornCodesError as e:
            self.fail(e.short_message, param, ctx)


class IntSetType(click.ParamType):
    """"1,3,4"；"[]" 为空集"""
    name = "int-set"

    def convert(self, value, param, ctx):
        if isinstance(value, (set, frozenset)):
            return value
        stripped = value.strip().strip("{}[]")
        pieces = [piece.strip() for piece in stripped.split(",") if piece.strip()]
        if not all(piece.isdigit() for piece in pieces):
            self.fail(f"无法解析整数集合: {value!r}", param, ctx)
        return frozenset(int(piece) for piece in pieces)


PARTITION = PartitionType()
FIELD = FieldType()
INT_SET = IntSetType()

FIELD_HELP = "有限域，形如 p、q、p^k 或 p^k/模多项式（例如 2^2/x^2+x+1）"


def _group_field(ctx: click.Context, param: click.Parameter, value: Optional[FieldSpec]) -> FieldSpec:
    """子命令未给出 --field 时沿用命令组上的 --field"""
    if value is not None:
        return value
    return ctx.find_object(CliState).field or FieldSpec(2)


field_option = click.option(
    "--field", "field", type=FIELD, default=None, callback=_group_field,
    help=FIELD_HELP + "；默认沿用 horn-codes --field",
)


def finish(payload: Any, text: str) -> None:
    """记录成功结果"""
    ctx = click.get_current_context()
    state: CliState = ctx.find_object(CliState)
    command = ctx.command_path.split(" ", 1)[1] if " " in ctx.command_path else ctx.command_path
    state.result = CommandResult(command=command, status="ok", payload=payload)
    state.text = text


def fail_invariant(diagnostics: List[str], text: str) -> None:
    """记录校验失败：状态 error，退出码 3"""
    ctx = click.get_current_context()
    state: CliState = ctx.find_object(CliState)
    command = ctx.command_path.split(" ", 1)[1] if " " in ctx.command_path else ctx.command_path
    state.result = CommandResult(
        command=command, status="error", diagnostics=diagnostics, exit_code=EXIT_INVARIANT
    )
    state.text = text


def _lines(items: Sequence[Any]) -> str:
    return "\n".join(str(item) for item in items)


def _rows(matrix: Sequence[Sequence[Any]]) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in matrix)


def _matrix_strings(matrix: PolyMatrix) -> List[List[str]]:
    return [[str(entry) for entry in row] for row in matrix.rows]


# ---------- 命令组 ----------

@click.group()
@click.option('--json', 'json_output', is_flag=True, help='以单个 JSON 文档输出结果')
@click.option('--debug', is_flag=True, help='启用调试模式')
@click.option('--field', 'field', type=FIELD, default="2", show_default=True, help=FIELD_HELP)
@click.pass_context
def cli(ctx: click.Context, json_output: bool, debug: bool, field: FieldSpec):
    """horn-codes - Horn 问题、LR/Kronecker 系数与射影求值码"""
    state: CliState = ctx.obj
    state.json_output = json_output
    state.field = field
    state.command = ctx.invoked_subcommand or ""
    setup_logging(debug)
    if debug:
        logger.debug("🐛 调试模式已启用")


def _enter_group(ctx: click.Context) -> None:
    """命令名记为 "组 子命令"，出错时也能报告"""
    ctx.find_object(CliState).command = f"{ctx.info_name} {ctx.invoked_subcommand or ''}".strip()


# ---------- 划分与对称函数 ----------

@cli.command()
@click.argument('n', type=int)
@click.option('--conjugates', is_flag=True, help='同时给出共轭划分')
def partition(n: int, conjugates: bool):
    """列出 n 的全部划分"""
    shapes = partitions_of(n)
    payload = {"n": n, "count": partition_count(n), "partitions": [str(p) for p in shapes]}
    if conjugates:
        payload["conjugates"] = [str(conjugate(p)) for p in shapes]
        text = _lines(f"{p}\t{conjugate(p)}" for p in shapes)
    else:
        text = _lines(shapes)
    finish(payload, f"{text}\n# p({n}) = {payload['count']}")


@cli.command()
@click.argument('n', type=int)
@click.argument('r', type=int)
@click.argument('q', type=int)
def qbinom(n: int, r: int, q: int):
    """F_q^{n+1} 中 (r+1) 维子空间个数"""
    value = q_binomial(n, r, q)
    finish(value, str(value))


@cli.command('index-partition')
@click.argument('index_set')
@click.argument('n', type=int)
def index_partition(index_set: str, n: int):
    """指标集 I ⊆ {1..n} 对应的划分 (i_r - r, ..., i_1 - 1)"""
    parsed = parse_index_set(index_set, n)
    value = partition_from_index_set(parsed, len(parsed))
    finish({"index_set": str(parsed), "r": len(parsed), "partition": str(value)}, str(value))


@cli.command()
@click.argument('vector')
@click.argument('d', type=int)
@click.argument('n', type=int)
def hypersimplex(vector: str, d: int, n: int):
    """c ∈ Δ(d+1, n)：各分量在 [0, 1] 内且总和为 d+1；分量可写成 1/2"""
    values = parse_rational_vector(vector)
    inside = hypersimplex_contains(values, d, n)
    payload = {"vector": [str(v) for v in values], "d": d, "n": n, "contains": inside}
    finish(payload, str(inside).lower())


@cli.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--vars', 'variables', type=int, help='变量个数，默认为 |λ|')
def schur(lam: Partition, variables: Optional[int]):
    """Schur 多项式 s_λ(x_1..x_m)"""
    poly = schur_polynomial(lam, variables or max(lam.size, 1))
    terms = [[list(exponent), c] for exponent, c in poly.terms]
    finish({"shape": str(lam), "variables": poly.variable_count, "terms": terms}, str(poly))


@cli.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--mu', type=PARTITION, required=True)
@click.option('--nu', type=PARTITION, help='省略时给出 s_λ·s_μ 的完整展开')
def lr(lam: Partition, mu: Partition, nu: Optional[Partition]):
    """Littlewood-Richardson 系数 c^ν_{λμ}"""
    if nu is not None:
        value = lr_coefficient(lam, mu, nu)
        finish(value, str(value))
        return
    expansion = lr_product(lam, mu)
    finish({str(k): v for k, v in expansion.items()}, _lines(f"{v}\t{k}" for k, v in expansion.items()))


@cli.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--mu', type=PARTITION, required=True)
@click.option('--nu', type=PARTITION, required=True)
def kron(lam: Partition, mu: Partition, nu: Partition):
    """Kronecker 系数 k^ν_{λμ}"""
    value = kronecker_coefficient(lam, mu, nu)
    finish(value, str(value))


@cli.command('kron-matrix')
@click.option('--nu', type=PARTITION, required=True)
@click.option('--kind', type=click.Choice([k.value for k in SliceKind]), default=SliceKind.KRONECKER.value)
@click.option('--stretch', type=int, default=1, show_default=True, help='LR 切片取 c^{stretch·ν}')
def kron_matrix(nu: Partition, kind: str, stretch: int):
    """系数矩阵切片，行列按 partitions_of(|ν|) 排列"""
    matrix_slice = coefficient_matrix_slice(nu, kind, stretch=stretch)
    index = [str(p) for p in matrix_slice.index]
    rows = matrix_slice.as_rows()
    finish(
        {"nu": str(nu), "kind": kind, "index": index, "matrix": rows},
        f"# index: {' | '.join(index)}\n{_rows(rows)}",
    )


@cli.command('lr-support')
@click.argument('n', type=int)
def lr_support_command(n: int):
    """|ν| = n 时 LR 系数为正的全部三元组"""
    support = lr_support(n, max_concurrency=config.max_workers)
    triples = [[str(lam), str(mu), str(nu)] for lam, mu, nu in support]
    finish(triples, _lines(";".join(t) for t in triples))


@cli.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--rho', type=PARTITION, required=True, help='轮换型')
def charvalue(lam: Partition, rho: Partition):
    """不可约特征标值 χ_λ(ρ)"""
    value = character_value(lam, CycleType(rho))
    finish(value, str(value))


@cli.command()
@click.argument('n', type=int)
def chartable(n: int):
    """S_n 的特征标表"""
    shapes, classes, table = character_table(n)
    payload = {"shapes": [str(s) for s in shapes], "classes": [str(c) for c in classes], "table": table}
    header = "λ\\ρ\t" + "\t".join(str(c) for c in classes)
    body = _lines(f"{s}\t" + "\t".join(str(v) for v in row) for s, row in zip(shapes, table))
    finish(payload, f"{header}\n{body}")


@cli.command()
@click.argument('n', type=int)
def rect(n: int):
    """k((i^n),(i^n),(i^n))，1 <= i <= n"""
    values = rectangular_coefficients(n)
    finish(values, " ".join(str(v) for v in values))


@cli.command()
@click.option('--nu', type=PARTITION, required=True)
def experiment(nu: Partition):
    """LR 切片 × Kronecker 切片的实验报告"""
    _, report = matrix_product_experiment(nu)
    lines = [f"# ν = {report.nu}, index: {' | '.join(report.index)}"]
    for outcome in report.conventions:
        lines.append(f"## {outcome.name}: {outcome.description}, identity = {outcome.is_identity}")
        lines.append(_rows(outcome.product))
    lines.append(f"# returned: {report.returned_convention}; {report.note}")
    finish(report.model_dump(), _lines(lines))


# ---------- Horn 三元组 ----------

@cli.group()
@click.pass_context
def horn(ctx: click.Context):
    """Horn 指标三元组集合 U^n_r / T^n_r"""
    _enter_group(ctx)


@horn.command('u')
@click.argument('n', type=int)
@click.argument('r', type=int)
def horn_u(n: int, r: int):
    triples = [format_triple(t) for t in u_set(n, r)]
    finish(triples, f"{_lines(triples)}\n# #={len(triples)}")


@horn.command('t')
@click.argument('n', type=int)
@click.argument('r', type=int)
def horn_t(n: int, r: int):
    triples = [format_triple(t) for t in t_set(n, r)]
    finish(triples, f"{_lines(triples)}\n# #={len(triples)}")


@horn.command('check')
@click.argument('n', type=int)
@click.argument('r', type=int)
def horn_check(n: int, r: int):
    """T 中 LR 系数为正、U∖T 中为零"""
    report = horn_lr_consistency(n, r, max_concurrency=config.max_workers)
    lines = [
        f"{entry.triple}\t{entry.lam};{entry.mu};{entry.nu}\t{entry.coefficient}\t{'T' if entry.in_t else 'U-T'}"
        for entry in report.t_entries + report.complement_entries
    ]
    payload = {**report.model_dump(), "consistent": report.consistent}
    if not report.consistent:
        fail_invariant([f"n={n}, r={r}: Horn 集合与 LR 正性不一致"], _lines(lines))
        return
    finish(payload, f"{_lines(lines)}\n# consistent = {report.consistent}")


# ---------- 有限域与多项式 ----------

@cli.command('field')
@field_option
@click.argument('op', type=click.Choice([op.value for op in FieldOp]))
@click.argument('a')
@click.argument('b', required=False)
def field_command(field: FieldSpec, op: str, a: str, b: Optional[str]):
    """单步域运算；元素写成整数或 a 的多项式"""
    left = parse_field_element(field, a)
    if op == FieldOp.POW.value:
        if b is None or not b.lstrip("-").isdigit():
            raise HornCodesError(ErrorType.INPUT_ERROR, "pow 需要整数指数", {"b": b})
        right = int(b)
    else:
        right = parse_field_element(field, b) if b is not None else None
    value = field_arithmetic(left, right, op)
    text = format_field_element(value)
    finish({"field": str(field), "result": text, "index": value.index}, text)


@cli.command()
@field_option
@click.argument('f')
@click.argument('g')
def euclid(field: FieldSpec, f: str, g: str):
    """Euclid 商序列与连分数重建"""
    numerator, denominator = parse_poly(field, f), parse_poly(field, g)
    quotients = euclid_quotients(numerator, denominator)
    rebuilt = continued_fraction_value(quotients)
    payload = {
        "quotients": [str(q) for q in quotients],
        "value": str(rebuilt),
        "degree_partition": str(quotient_degree_partition(rebuilt)),
    }
    finish(payload, f"{_lines(payload['quotients'])}\n# f/g = {payload['value']}")


@cli.command()
@field_option
@click.argument('phi')
def qmatrix(field: FieldSpec, phi: str):
    """连分数商组成的对角矩阵及其不变因子划分"""
    rational = parse_rational_function(field, phi)
    matrix = quotient_matrix(rational)
    partition_ = invariant_factor_partition(matrix)
    payload = {
        "matrix": _matrix_strings(matrix),
        "invariant_partition": str(partition_),
        "degree_partition": str(quotient_degree_partition(rational)),
    }
    finish(payload, f"{format_poly_matrix(matrix)}\n# partition = {partition_}")


@cli.command()
@field_option
@click.argument('phi')
def qdegree(field: FieldSpec, phi: str):
    """Euclid 商的次数划分"""
    value = quotient_degree_partition(parse_rational_function(field, phi))
    finish(str(value), str(value))


@cli.command('local-degree')
@field_option
@click.argument('phi')
@click.argument('point')
def local_degree_command(field: FieldSpec, phi: str, point: str):
    """局部次数 m_φ(x0)，x0 可为 inf"""
    rational = parse_rational_function(field, phi)
    x0 = parse_p1_point(field, point)
    value = local_degree(rational, x0)
    image = rational.evaluate(x0)
    payload = {
        "local_degree": value,
        "image": str(image),
        "fiber": [str(x) for x in fiber(rational, image)],
        "degree": rational.degree,
    }
    finish(payload, str(value))


@cli.command()
@field_option
@click.argument('path', type=click.Path(dir_okay=False))
def snf(field: FieldSpec, path: str):
    """多项式矩阵的 Smith 标准形；文件每行一行，元素以 ";" 分隔"""
    matrix = read_poly_matrix(field, path)
    form = smith_normal_form(matrix)
    payload = {
        "factors": [str(d) for d in form.factors],
        "U": _matrix_strings(form.U),
        "V": _matrix_strings(form.V),
        "D": _matrix_strings(form.D),
    }
    if matrix.is_square() and all(not d.is_zero() for d in form.factors):
        payload["partition"] = str(invariant_factor_partition(matrix))
    text = "\n".join([
        _lines(payload["factors"]),
        "# U", format_poly_matrix(form.U),
        "# V", format_poly_matrix(form.V),
    ])
    finish(payload, text)


@cli.command('horn-instance')
@field_option
@click.argument('a_path', type=click.Path(dir_okay=False))
@click.argument('b_path', type=click.Path(dir_okay=False))
def horn_instance_command(field: FieldSpec, a_path: str, b_path: str):
    """A、B 与 A·B 的不变因子划分 (α, β, γ)"""
    instance = horn_instance(read_poly_matrix(field, a_path), read_poly_matrix(field, b_path))
    c = lr_coefficient(instance.alpha, instance.beta, instance.gamma)
    payload = {
        "alpha": str(instance.alpha),
        "beta": str(instance.beta),
        "gamma": str(instance.gamma),
        "lr_coefficient": c,
    }
    finish(payload, f"{instance.alpha};{instance.beta};{instance.gamma}\t{c}")


# ---------- 射影几何 ----------

@cli.command()
@field_option
@click.argument('n', type=int)
def nrc(field: FieldSpec, n: int):
    """PG(n, q) 中正规有理曲线的点"""
    points = [str(p) for p in nrc_points(n, field)]
    finish(points, f"{_lines(points)}\n# #={len(points)}")


@cli.command()
@field_option
@click.argument('point')
@click.argument('d', type=int)
def veronese(field: FieldSpec, point: str, d: int):
    """[x, y] ↦ [x^d, ..., y^d]"""
    image = str(veronese_map(parse_point(field, point), d))
    finish(image, image)


@cli.command()
@field_option
@click.argument('points', nargs=-1)
@click.option('--nrc', 'nrc_n', type=int, help='使用 PG(n, q) 中的正规有理曲线')
def arc(field: FieldSpec, points: Sequence[str], nrc_n: Optional[int]):
    """k-弧判定；射影平面中同时给出最大共线点数"""
    if nrc_n is not None:
        parsed = nrc_points(nrc_n, field)
    else:
        if not points:
            raise HornCodesError(ErrorType.INPUT_ERROR, "需要给出点或 --nrc")
        parsed = [parse_point(field, p) for p in points]
    payload = {"points": len(parsed), "is_arc": is_k_arc(parsed)}
    if parsed[0].dimension == 2:
        payload["max_collinear"] = max_collinear(parsed)
    finish(payload, _lines(f"{k} = {v}" for k, v in payload.items()))


@cli.command()
@field_option
@click.argument('xs', nargs=-1, required=True)
def vandermonde(field: FieldSpec, xs: Sequence[str]):
    """Π_{i<j} (x_j - x_i)；非零当且仅当对应的 NRC 点线性无关"""
    product = vandermonde_product([parse_field_element(field, x) for x in xs])
    text = format_field_element(product)
    finish({"field": str(field), "value": text, "nonzero": bool(product)}, text)


@cli.command()
@click.argument('j_set', type=INT_SET)
@click.argument('n', type=int)
@click.argument('p', type=int)
def omega(j_set, n: int, p: int):
    """⋃_{j∈J} {m | C(m, j) ≢ 0 mod p}"""
    values = sorted(omega_closure(j_set, n, p))
    finish(values, ",".join(str(v) for v in values))


@cli.command()
@click.argument('j_set', type=INT_SET)
@click.argument('n', type=int)
def psi(j_set, n: int):
    """⋃_{j∈J} {j, n-j}"""
    values = sorted(psi_closure(j_set, n))
    finish(values, ",".join(str(v) for v in values))


@cli.command()
@field_option
@click.argument('n', type=int)
def collineation(field: FieldSpec, n: int):
    """对角直射与反转是否保持正规有理曲线"""
    report = collineation_invariance_check(n, field)
    payload = {**report.model_dump(), "all_preserved": report.all_preserved}
    lines = [f"diag({a}) = {ok}" for a, ok in report.diagonal.items()]
    lines.append(f"reversal = {report.reversal_preserved}")
    finish(payload, _lines(lines))


# ---------- 码 ----------

@cli.command('rr-basis')
@field_option
@click.argument('divisor')
def rr_basis(field: FieldSpec, divisor: str):
    """L(D) 的基"""
    basis = [str(b) for b in riemann_roch_basis(parse_divisor(field, divisor))]
    finish(basis, _lines(basis))


def _code_payload(code, with_distance: bool) -> dict:
    payload = {
        "n": code.length,
        "k": code.dimension,
        "q": code.field.q,
        "generator": [[format_field_element(v) for v in row] for row in code.generator],
    }
    if with_distance and code.dimension > 0:
        payload["d"] = min_distance(code, bound=config.exhaustion_bound, max_concurrency=config.max_workers)
    return payload


def _code_text(payload: dict) -> str:
    header = f"{payload['n']} {payload['k']} {payload.get('d', '?')} {payload['q']}"
    return "\n".join([header, *(" ".join(row) for row in payload["generator"])])


@cli.group()
@click.pass_context
def code(ctx: click.Context):
    """求值码、三点码、Grassmann 码与轨道码"""
    _enter_group(ctx)


@code.command('eval')
@field_option
@click.argument('divisor')
@click.option('--point', 'points', multiple=True, help='求值点，可重复；默认取支撑外的全部点')
@click.option('--no-distance', is_flag=True, help='不穷举最小距离')
def code_eval(field: FieldSpec, divisor: str, points: Sequence[str], no_distance: bool):
    """D 的求值码"""
    parsed = parse_divisor(field, divisor)
    if points:
        eval_points = [parse_p1_point(field, p) for p in points]
    else:
        support = set(parsed.support)
        eval_points = [p for p in projective_line(field) if p not in support]
    payload = _code_payload(evaluation_code(parsed, eval_points), not no_distance)
    finish(payload, _code_text(payload))


@code.command('direct-sum')
@field_option
@click.argument('divisors', nargs=-1, required=True)
@click.option('--point', 'points', multiple=True, help='求值点，可重复；默认取全部支撑之外的点')
@click.option('--no-distance', is_flag=True, help='不穷举最小距离')
def code_direct_sum(field: FieldSpec, divisors: Sequence[str], points: Sequence[str], no_distance: bool):
    """O(D_1) ⊕ ... ⊕ O(D_r) 的直和码，码长 r·n"""
    parsed = [parse_divisor(field, text) for text in divisors]
    eval_points = [parse_p1_point(field, p) for p in points] if points else None
    payload = _code_payload(direct_sum_code(parsed, eval_points), not no_distance)
    payload["rank"] = len(parsed)
    finish(payload, _code_text(payload))


@code.command('rational-map')
@field_option
@click.argument('phi')
@click.option('--point', 'points', multiple=True, help='求值点，可重复；默认取 φ 无极点的全部点')
def code_rational_map(field: FieldSpec, phi: str, points: Sequence[str]):
    """商码的一个码字 (φ(P_1), ..., φ(P_n))"""
    rational = parse_rational_function(field, phi)
    if points:
        eval_points = [parse_p1_point(field, p) for p in points]
    else:
        eval_points = [p for p in projective_line(field) if rational.evaluate(p) is not INFINITY]
    word = [format_field_element(v) for v in rational_map_code(rational, eval_points)]
    finish({"points": [str(p) for p in eval_points], "codeword": word}, " ".join(word))


@code.command('three-point')
@click.argument('a', type=int)
@click.argument('b', type=int)
@click.argument('c', type=int)
@click.argument('d', type=int)
@click.argument('q', type=int)
@click.option('--no-distance', is_flag=True, help='不穷举最小距离')
def code_three_point(a: int, b: int, c: int, d: int, q: int, no_distance: bool):
    """GF(q^2) 上 a[0] + b[1] + c[∞] 的求值码"""
    payload = _code_payload(three_point_code(a, b, c, d, q), not no_distance)
    finish(payload, _code_text(payload))


@code.command('mindist')
@field_option
@click.argument('path', type=click.Path(dir_okay=False))
def code_mindist(field: FieldSpec, path: str):
    """生成矩阵文件给出的码的最小距离与重量分布"""
    code_ = LinearCode.from_rows(field, read_field_matrix(field, path))
    payload = _code_payload(code_, True)
    payload["weights"] = weight_distribution(code_, bound=config.exhaustion_bound, max_concurrency=config.max_workers)
    finish(payload, f"{_code_text(payload)}\n# weights: {' '.join(str(w) for w in payload['weights'])}")


@code.command('grassmann')
@click.argument('n', type=int)
@click.argument('r', type=int)
@click.argument('q', type=int)
@click.option('--no-bruteforce', is_flag=True, help='不计算 Plücker 矩阵的秩')
def code_grassmann(n: int, r: int, q: int, no_bruteforce: bool):
    """Grassmann 码的长度与维数"""
    params = grassmann_code_params(n, r, q, bruteforce=not no_bruteforce, bound=config.exhaustion_bound)
    finish(params.model_dump(), _lines(f"{k} = {v}" for k, v in params.model_dump().items()))


@code.command('orbit')
@field_option
@click.argument('u_path', type=click.Path(dir_okay=False))
@click.option('--generator', 'generator_paths', multiple=True, type=click.Path(dir_okay=False),
              help='生成元矩阵文件，可重复；默认取 GL(n, q) 的生成元')
def code_orbit(field: FieldSpec, u_path: str, generator_paths: Sequence[str]):
    """行空间在矩阵群下的轨道（常维数子空间码）"""
    U = to_matrix(field, read_field_matrix(field, u_path))
    n = len(U[0]) if U else 0
    generators = (
        [to_matrix(field, read_field_matrix(field, p)) for p in generator_paths]
        if generator_paths
        else general_linear_generators(field, n)
    )
    orbit = sorted(grassmann_orbit(U, generators), key=lambda s: s.key())
    payload = {"size": len(orbit), "subspaces": [str(s) for s in orbit]}
    if len(orbit) >= 2:
        payload["min_distance"] = orbit_min_distance(orbit)
    finish(payload, f"{_lines(payload['subspaces'])}\n# size = {len(orbit)}, d = {payload.get('min_distance', '?')}")


@code.command('config-orbit')
@click.argument('points', nargs=-1, required=True)
@click.option('--perm', 'perms', multiple=True, required=True, help='{1..n} 上的置换，形如 2,1,3')
@click.option('--ordered', is_flag=True, help='按有序配置区分')
def code_config_orbit(points: Sequence[str], perms: Sequence[str], ordered: bool):
    """点配置在置换群下的轨道"""
    generators = []
    for text in perms:
        pieces = [piece.strip() for piece in text.split(",")]
        if not all(piece.isdigit() for piece in pieces):
            raise HornCodesError(ErrorType.INPUT_ERROR, f"无法解析置换: {text!r}", {"perm": text})
        generators.append([int(piece) for piece in pieces])
    orbits = sorted(configuration_orbits(list(points), generators, ordered=ordered))
    members = [",".join(c) for c in orbits]
    finish({"size": len(orbits), "configurations": members}, f"{_lines(members)}\n# size = {len(orbits)}")


# ---------- 验收与黄金文件 ----------

@cli.command()
@click.argument('suite', type=click.Choice(AcceptanceVerifier.suite_names()))
@click.option('--workers', type=int, help='并发线程数')
@click.option('--seed', type=int, help='随机校验的种子')
@click.pass_obj
def verify(state: CliState, suite: str, workers: Optional[int], seed: Optional[int]):
    """运行验收套件，逐项打印 PASS/FAIL"""
    if workers:
        config.max_workers = workers
    if seed is not None:
        config.seed = seed
    verifier = AcceptanceVerifier(config, show_progress=not state.json_output)
    reports = verifier.run(suite)
    text = "\n".join(format_report(report) for report in reports)
    failures = [f"{check.suite} {check.name}: {check.detail}" for report in reports for check in report.failures]
    if failures:
        fail_invariant(failures, text)
        return
    finish([report.summary() for report in reports], text)


@cli.group()
@click.pass_context
def golden(ctx: click.Context):
    """附录三元组黄金文件"""
    _enter_group(ctx)


@golden.command('write')
def golden_write():
    """按当前实现重写黄金文件"""
    paths = [str(p) for p in GoldenManager(config).write_all()]
    finish(paths, _lines(paths))


@golden.command('check')
def golden_check():
    """逐元素比对黄金文件"""
    results = GoldenManager(config).check_all()
    text = _lines(f"{'PASS' if r.passed else 'FAIL'} {r.name} {r.detail}" for r in results)
    failures = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    if failures:
        fail_invariant(failures, text)
        return
    finish([r.model_dump() for r in results], text)


# ---------- 入口 ----------

def _error_result(state: CliState, exit_code: int, message: str) -> CommandResult:
    return CommandResult(
        command=state.command, status="error", diagnostics=[message], exit_code=exit_code
    )


def run(argv: Sequence[str]) -> CommandResult:
    """解析 argv、执行命令并输出；返回结构化结果"""
    argv = list(argv)
    state = CliState(json_output="--json" in argv)
    try:
        code_ = cli.main(args=argv, prog_name="horn-codes", standalone_mode=False, obj=state)
        result = state.result or CommandResult(
            command=state.command, status="ok", exit_code=code_ or EXIT_OK
        )
    except click.ClickException as e:
        result = _error_result(state, EXIT_INPUT, e.format_message())
    except click.Abort:
        result = _error_result(state, EXIT_INPUT, "已中止")
    except HornCodesError as e:
        exit_code = EXIT_INVARIANT if e.error_type is ErrorType.INVARIANT_FAILURE else EXIT_INPUT
        logger.error(f"❌ {e}")
        result = _error_result(state, exit_code, str(e))
    except Exception as e:
        # 库之外的异常一律视为内部错误
        logger.error(f"💥 {state.command or 'horn-codes'} 内部错误: {e}", exc_info=True)
        result = _error_result(state, EXIT_INVARIANT, f"内部错误: {type(e).__name__}: {e}")

    if state.json_output:
        click.echo(result.model_dump_json())
    else:
        if state.text:
            click.echo(state.text)
        for line in result.diagnostics:
            click.echo(line, err=True)
    return result


def main() -> None:
    sys.exit(run(sys.argv[1:]).exit_code)


if __name__ == '__main__':
    main()
