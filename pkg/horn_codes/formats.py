"""
文本格式 - 命令行与黄金文件共用的解析/输出

打印出的划分、多项式、除子、点都能原样作为输入读回。
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, List, Sequence, Tuple, Union

from horn_codes.exception import ErrorType, HornCodesError, require
from horn_codes.finite_field import FieldElement, FieldSpec
from horn_codes.partitions import EMPTY, IndexSet, Partition

if TYPE_CHECKING:
    from horn_codes.codes import Divisor, LinearCode
    from horn_codes.poly_matrix import PolyMatrix
    from horn_codes.polynomials import P1Point, Poly, RationalFunction
    from horn_codes.projective import ProjectivePoint

logger = logging.getLogger(__name__)

_INT = re.compile(r"^[+-]?\d+$")


def _input_error(message: str, text: str) -> HornCodesError:
    return HornCodesError(ErrorType.INPUT_ERROR, message, {"text": text})


# ---------- 划分 ----------

def format_partition(p: Partition) -> str:
    return str(p)


def parse_partition(text: str) -> Partition:
    """"5,3,3,1"；"[]" 或空串为空划分"""
    stripped = text.strip()
    if stripped in ("", "[]", "()"):
        return EMPTY
    stripped = stripped.strip("()[]")
    pieces = [piece.strip() for piece in stripped.split(",")]
    if not all(piece.isdigit() for piece in pieces):
        raise _input_error(f"无法解析划分: {text!r}", text)
    return Partition.from_sequence([int(piece) for piece in pieces])


def parse_index_set(text: str, ambient: int) -> IndexSet:
    """"{1,3,4}" 或 "1,3,4"；"{}" 为空集"""
    stripped = text.strip().strip("{}[]() ")
    if not stripped:
        return IndexSet((), ambient)
    pieces = [piece.strip() for piece in stripped.split(",")]
    if not all(piece.isdigit() for piece in pieces):
        raise _input_error(f"无法解析指标集: {text!r}", text)
    return IndexSet(tuple(int(piece) for piece in pieces), ambient)


def parse_rational_vector(text: str) -> List[Fraction]:
    """"1/2,1/2,1,0" → 精确有理数向量"""
    pieces = [piece.strip() for piece in text.strip().strip("()[]").split(",") if piece.strip()]
    try:
        return [Fraction(piece) for piece in pieces]
    except (ValueError, ZeroDivisionError):
        raise _input_error(f"无法解析有理数向量: {text!r}", text) from None


# ---------- GF(p) 上的模多项式 ----------

def format_mod_p_poly(coeffs: Sequence[int], variable: str = "x") -> str:
    """升幂整数系数 → "x^2+x+1"（降幂、无空格）"""
    terms = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if not c:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        power = variable if degree == 1 else f"{variable}^{degree}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def _parse_sum(text: str, variable: str, p: int) -> List[int]:
    """"2a^2+a+1" 这类以 + / - 相连的单项式和 → 升幂整数系数"""
    compact = text.replace(" ", "").replace("*", "")
    require(compact != "", ErrorType.INPUT_ERROR, "空表达式", text=text)
    pattern = re.compile(rf"([+-]?)(\d*)({variable}(?:\^(\d+))?)?")
    coeffs: dict = {}
    position = 0
    while position < len(compact):
        match = pattern.match(compact, position)
        if not match or match.end() == position or (not match.group(2) and not match.group(3)):
            raise _input_error(f"无法解析表达式: {text!r}", text)
        sign = -1 if match.group(1) == "-" else 1
        value = int(match.group(2)) if match.group(2) else 1
        degree = 0
        if match.group(3):
            degree = int(match.group(4)) if match.group(4) else 1
        coeffs[degree] = coeffs.get(degree, 0) + sign * value
        position = match.end()
        if position < len(compact) and compact[position] not in "+-":
            raise _input_error(f"无法解析表达式: {text!r}", text)
    top = max(coeffs)
    return [coeffs.get(d, 0) % p for d in range(top + 1)]


def parse_mod_p_poly(text: str, p: int) -> Tuple[int, ...]:
    return tuple(_parse_sum(text, "x", p))


# ---------- 有限域 ----------

def parse_field_spec(text: str) -> FieldSpec:
    """"p"、"q"（素数幂）、"p^k" 或 "p^k/modulus"，例如 "2^2/x^2+x+1\""""
    stripped = text.strip().replace(" ", "")
    head, _, modulus_text = stripped.partition("/")
    base, _, exponent = head.partition("^")
    if not base.isdigit() or (exponent and not exponent.isdigit()):
        raise _input_error(f"无法解析有限域: {text!r}", text)
    p = int(base)
    if not exponent:
        require(not modulus_text, ErrorType.INPUT_ERROR, f"模多项式需要 p^k 形式: {text!r}", text=text)
        return FieldSpec.of_order(p)
    k = int(exponent)
    modulus = parse_mod_p_poly(modulus_text, p) if modulus_text else None
    return FieldSpec(p, k, modulus)


def format_field_spec(field: FieldSpec) -> str:
    return str(field)


def format_field_element(element: FieldElement) -> str:
    if element.field.k == 1:
        return str(element.coords[0])
    return format_mod_p_poly(element.coords, variable="a")


def parse_field_element(field: FieldSpec, text: str) -> FieldElement:
    """整数或以 a 表示生成元的多项式，例如 "a^2+a+1"、"3\""""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    if _INT.match(stripped):
        return field.element(int(stripped))
    if field.k == 1:
        raise _input_error(f"GF({field.p}) 的元素必须为整数: {text!r}", text)
    coeffs = _parse_sum(stripped, "a", field.p)
    alpha = field.generator()
    value = field.zero()
    for degree, c in enumerate(coeffs):
        if c:
            value = value + alpha**degree * c
    return value


# ---------- 多项式与有理函数 ----------

def _coefficient_text(c: FieldElement) -> str:
    text = format_field_element(c)
    return f"({text})" if "+" in text else text


def format_poly(poly: "Poly") -> str:
    """"c0 + c1*x + c2*x^2"（升幂）"""
    terms = []
    for degree, c in enumerate(poly.coeffs):
        if not c:
            continue
        coefficient = _coefficient_text(c)
        if degree == 0:
            terms.append(coefficient)
            continue
        power = "x" if degree == 1 else f"x^{degree}"
        terms.append(power if c == c.field.one() else f"{coefficient}*{power}")
    return " + ".join(terms) if terms else "0"


def _split_terms(text: str) -> List[Tuple[int, str]]:
    """按括号外的 + / - 拆分，返回 (符号, 项)"""
    terms: List[Tuple[int, str]] = []
    depth, sign, current = 0, 1, []
    for char in text:
        if char in "([":
            depth += 1
        elif char in ")]":
            depth -= 1
            if depth < 0:
                raise _input_error(f"括号不匹配: {text!r}", text)
        if depth == 0 and char in "+-":
            if "".join(current).strip():
                terms.append((sign, "".join(current).strip()))
            sign = -1 if char == "-" else 1
            current = []
            continue
        current.append(char)
    if depth != 0:
        raise _input_error(f"括号不匹配: {text!r}", text)
    if "".join(current).strip():
        terms.append((sign, "".join(current).strip()))
    return terms


def parse_poly(field: FieldSpec, text: str) -> "Poly":
    from horn_codes.polynomials import Poly

    terms = _split_terms(text.replace(" ", ""))
    if not terms:
        raise _input_error(f"空多项式: {text!r}", text)
    result = Poly.zero(field)
    for sign, term in terms:
        depth, x_at = 0, -1
        for i, char in enumerate(term):
            depth += char == "("
            depth -= char == ")"
            if char == "x" and depth == 0:
                x_at = i
                break
        if x_at < 0:
            coefficient, degree = parse_field_element(field, term), 0
        else:
            coefficient_text = term[:x_at].rstrip("*")
            exponent_text = term[x_at + 1:]
            if exponent_text and not re.fullmatch(r"\^\d+", exponent_text):
                raise _input_error(f"无法解析多项式项: {term!r}", text)
            degree = int(exponent_text[1:]) if exponent_text else 1
            coefficient = parse_field_element(field, coefficient_text) if coefficient_text else field.one()
        result = result + Poly.monomial(field, degree, coefficient * sign)
    return result


def format_rational_function(phi: "RationalFunction") -> str:
    return str(phi)


def parse_rational_function(field: FieldSpec, text: str) -> "RationalFunction":
    """"f" 或 "(f) / (g)\""""
    from horn_codes.polynomials import Poly, RationalFunction

    depth, slash = 0, -1
    for i, char in enumerate(text):
        depth += char == "("
        depth -= char == ")"
        if char == "/" and depth == 0:
            slash = i
            break
    if slash < 0:
        return RationalFunction.from_poly(parse_poly(field, text))

    def unwrap(part: str) -> str:
        part = part.strip()
        if part.startswith("(") and part.endswith(")"):
            return part[1:-1]
        return part

    numerator = parse_poly(field, unwrap(text[:slash]))
    denominator = parse_poly(field, unwrap(text[slash + 1:]))
    if denominator.is_zero():
        raise HornCodesError(ErrorType.ZERO_DIVISION, "有理函数的分母为零", {"text": text})
    return RationalFunction(numerator, denominator)


# ---------- 点 ----------

def format_p1_point(point: "P1Point") -> str:
    return str(point)


def parse_p1_point(field: FieldSpec, text: str) -> "P1Point":
    from horn_codes.polynomials import INFINITY

    if text.strip().lower() in ("inf", "∞"):
        return INFINITY
    return parse_field_element(field, text)


def format_point(point: "ProjectivePoint") -> str:
    return "(" + ":".join(format_field_element(c) for c in point.coords) + ")"


def parse_point(field: FieldSpec, text: str) -> "ProjectivePoint":
    from horn_codes.projective import ProjectivePoint

    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise _input_error(f"点的格式应为 (c0:c1:...): {text!r}", text)
    coords = [parse_field_element(field, piece) for piece in stripped[1:-1].split(":")]
    return ProjectivePoint.of(field, coords)


# ---------- 除子 ----------

_DIVISOR_TERM = re.compile(r"^(\d*)\*?\[([^\]]+)\]$")


def format_divisor(divisor: "Divisor") -> str:
    """"2*[inf] + 1*[0] - 1*[3]"；零除子为 "0\""""
    pieces = []
    for point, multiplicity in divisor.items():
        sign = "-" if multiplicity < 0 else "+"
        pieces.append((sign, f"{abs(multiplicity)}*[{format_p1_point(point)}]"))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, piece in pieces[1:]:
        text += f" {sign} {piece}"
    return text


def parse_divisor(field: FieldSpec, text: str) -> "Divisor":
    from horn_codes.codes import Divisor

    compact = text.replace(" ", "")
    if compact in ("", "0"):
        return Divisor(field, {})
    multiplicities: dict = {}
    for sign, term in _split_terms(compact):
        match = _DIVISOR_TERM.match(term)
        if not match:
            raise _input_error(f"无法解析除子项: {term!r}", text)
        count = int(match.group(1)) if match.group(1) else 1
        point = parse_p1_point(field, match.group(2))
        multiplicities[point] = multiplicities.get(point, 0) + sign * count
    return Divisor(field, multiplicities)


# ---------- 矩阵文件 ----------

def format_poly_matrix(matrix: "PolyMatrix") -> str:
    return "\n".join("; ".join(format_poly(entry) for entry in row) for row in matrix.rows)


def parse_poly_matrix(field: FieldSpec, text: str) -> "PolyMatrix":
    from horn_codes.poly_matrix import PolyMatrix

    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    rows = [[parse_poly(field, entry) for entry in line.split(";")] for line in lines]
    return PolyMatrix.from_rows(field, rows)


def read_poly_matrix(field: FieldSpec, path: Union[str, Path]) -> "PolyMatrix":
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise HornCodesError(ErrorType.FILE_ERROR, f"读取矩阵文件失败: {path}", {"error": str(e)})
    return parse_poly_matrix(field, text)


def read_field_matrix(field: FieldSpec, path: Union[str, Path]) -> List[List[FieldElement]]:
    """常数矩阵文件：每行一行，元素以 ";" 分隔"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise HornCodesError(ErrorType.FILE_ERROR, f"读取矩阵文件失败: {path}", {"error": str(e)})
    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    return [[parse_field_element(field, entry) for entry in line.split(";")] for line in lines]


# ---------- 码 ----------

def format_code(code: "LinearCode", with_distance: bool = True) -> str:
    """首行 "n k d q"，随后每行一个生成矩阵行"""
    d = code.min_distance if with_distance and code.dimension > 0 else "?"
    header = f"{code.length} {code.dimension} {d} {code.field.q}"
    rows = [" ".join(format_field_element(v) for v in row) for row in code.generator]
    return "\n".join([header, *rows])
