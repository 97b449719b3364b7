"""사용자 소스항 수식 파서

`--source "x^2 - 1/6"` 처럼 CLI에서 받은 작은 산술식을 sympy로 파싱하고
x에 대한 numpy 벡터화 함수로 변환합니다.

지원:
- 연산자: + - * / ^ (** 동일)
- 변수: x / 상수: pi, e
- 함수: abs, sign, sqrt, exp, log, sin, cos
"""

import re

import numpy as np
import sympy as sym
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .errors import ExpressionError

X = sym.Symbol("x", real=True)

_NAMESPACE = {
    "x": X,
    "pi": sym.pi,
    "e": sym.E,
    "abs": sym.Abs,
    "sign": sym.sign,
    "sqrt": sym.sqrt,
    "exp": sym.exp,
    "log": sym.log,
    "sin": sym.sin,
    "cos": sym.cos,
}

_ALLOWED_FUNCTIONS = (sym.Abs, sym.sign, sym.exp, sym.log, sym.sin, sym.cos)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)

# 허용 문자 (숫자, 식별자, 연산자, 괄호, 공백)
_ALLOWED_CHARS = re.compile(r"^[\w\s.+\-*/^()]*$")
# 속성 접근 / 던더 이름
_FORBIDDEN = re.compile(r"__|[A-Za-z_)]\s*\.")


class SourceExpression:
    """x에 대한 스칼라 수식 (호출 가능)"""

    def __init__(self, text: str):
        if not text or not text.strip():
            raise ExpressionError("빈 수식입니다")
        if not _ALLOWED_CHARS.match(text) or _FORBIDDEN.search(text):
            raise ExpressionError(f"허용되지 않는 문자가 포함된 수식: {text!r}")

        self.text = text.strip()
        try:
            expr = parse_expr(
                self.text,
                local_dict=dict(_NAMESPACE),
                global_dict={"Integer": sym.Integer, "Float": sym.Float, "Rational": sym.Rational, "Symbol": sym.Symbol},
                transformations=_TRANSFORMATIONS,
                evaluate=True,
            )
        except Exception as e:
            raise ExpressionError(f"수식 파싱 실패: {text!r} ({e})") from e

        self.expr = sym.sympify(expr)
        self._check(self.expr)
        self._func = sym.lambdify(X, self.expr, modules="numpy")

    def _check(self, expr: sym.Basic) -> None:
        """x 이외의 기호, 허용 목록 밖 함수 거부"""
        if not isinstance(expr, sym.Expr):
            raise ExpressionError(f"스칼라 수식이 아닙니다: {self.text!r}")
        unknown = expr.free_symbols - {X}
        if unknown:
            raise ExpressionError(f"알 수 없는 이름: {', '.join(sorted(map(str, unknown)))}")
        for func in expr.atoms(sym.Function):
            if isinstance(func, AppliedUndef) or not isinstance(func, _ALLOWED_FUNCTIONS):
                raise ExpressionError(f"지원하지 않는 함수: {func.func}")

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            result = self._func(x_arr)
        # 상수식도 x와 같은 모양으로 반환
        return np.broadcast_to(np.asarray(result, dtype=float), x_arr.shape).copy()

    def __repr__(self) -> str:
        return f"SourceExpression({self.text!r})"


def parse_source(text: str) -> SourceExpression:
    """수식 문자열을 SourceExpression으로 변환"""
    return SourceExpression(text)
