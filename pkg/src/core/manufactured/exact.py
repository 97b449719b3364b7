"""정확해(제조해) 족과 강형식 일관성 검사

모든 쌍은 약형식에서 부분적분으로 얻는 강형식
    v'' = f,   u'' = sign(v)|v|^(q-1),   u = v = 0 (경계)
에 대해 검증된 뒤에만 사용됩니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..common.errors import ConsistencyError
from ..config import config
from ..fem.assembly import nonlinear_source
from ..solver.mixed import conjugate_exponent
from .oracle import oracle_u_from_v

logger = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-14

IDENTITY_V = "v'' = f"
IDENTITY_U = "u'' = sign(v)|v|^(q-1)"
IDENTITY_BOUNDARY = "u(a) = u(b) = v(a) = v(b) = 0"


@dataclass(frozen=True)
class ExactPair:
    """정확해 (u, v)와 소스항 f"""

    u: Callable
    u_prime: Callable
    v: Callable
    v_prime: Callable
    f: Callable
    p: float
    label: str
    domain: tuple[float, float] = (0.0, 1.0)
    notes: tuple[str, ...] = ()
    u_degree: int | None = None  # 다항식이면 차수, 아니면 None
    v_degree: int | None = None

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)


@dataclass(frozen=True)
class ConsistencyReport:
    """강형식 일관성 검사 결과"""

    label: str
    p: float
    max_defect_v: float
    max_defect_u: float
    boundary_defect: float
    worst_location: float
    tol: float
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def max_defect(self) -> float:
        return max(self.max_defect_v, self.max_defect_u, self.boundary_defect)

    @property
    def failing_identity(self) -> str | None:
        if self.boundary_defect > BOUNDARY_TOL:
            return IDENTITY_BOUNDARY
        if self.max_defect_v > self.tol:
            return IDENTITY_V
        if self.max_defect_u > self.tol:
            return IDENTITY_U
        return None

    @property
    def passed(self) -> bool:
        return self.failing_identity is None


def chebyshev_points(a: float, b: float, n: int) -> np.ndarray:
    """(a, b) 내부의 Chebyshev 점 n개 (오름차순)"""
    k = np.arange(1, n + 1)
    t = (1.0 - np.cos((2 * k - 1) * np.pi / (2 * n))) / 2.0
    return a + (b - a) * t


def _second_derivative(func_prime: Callable, x: np.ndarray, a: float, b: float) -> np.ndarray:
    """1계 도함수의 4차 중심 차분으로 2계 도함수 근사"""
    h = np.minimum(1e-4, 0.01 * np.minimum(x - a, b - x))
    fp = func_prime
    return (-fp(x + 2 * h) + 8 * fp(x + h) - 8 * fp(x - h) + fp(x - 2 * h)) / (12 * h)


def check_consistency(pair: ExactPair, n_points: int | None = None, tol: float | None = None) -> ConsistencyReport:
    """Chebyshev 내부점에서 v'' ≈ f, u'' ≈ sign(v)|v|^(q-1) 확인

    결함은 max(1, |기준값|)으로 나눈 값입니다.
    """
    n_points = n_points or config.consistency_points
    tol = tol if tol is not None else config.consistency_tol
    a, b = pair.domain
    x = chebyshev_points(a, b, n_points)

    f_ref = np.asarray(pair.f(x), dtype=float)
    defect_v = np.abs(_second_derivative(pair.v_prime, x, a, b) - f_ref) / np.maximum(1.0, np.abs(f_ref))

    g_ref = nonlinear_source(np.asarray(pair.v(x), dtype=float), pair.q)
    defect_u = np.abs(_second_derivative(pair.u_prime, x, a, b) - g_ref) / np.maximum(1.0, np.abs(g_ref))

    ends = np.array([a, b])
    boundary = float(np.max(np.abs(np.concatenate([pair.u(ends), pair.v(ends)]))))

    worst = defect_v if defect_v.max() >= defect_u.max() else defect_u
    report = ConsistencyReport(
        label=pair.label,
        p=pair.p,
        max_defect_v=float(defect_v.max()),
        max_defect_u=float(defect_u.max()),
        boundary_defect=boundary,
        worst_location=float(x[np.argmax(worst)]),
        tol=tol,
        notes=pair.notes,
    )
    logger.debug(
        f"일관성 검사 {pair.label}: v={report.max_defect_v:.2e}, u={report.max_defect_u:.2e}, "
        f"boundary={boundary:.2e}"
    )
    return report


def _accept(pair: ExactPair, validate: bool) -> ExactPair:
    if validate:
        report = check_consistency(pair)
        if not report.passed:
            raise ConsistencyError(report)
    return pair


# === 예제 1: f = 1 ===

def _ex1_v(x):
    x = np.asarray(x, dtype=float)
    return x * (x - 1.0) / 2.0


def _ex1_v_prime(x):
    return np.asarray(x, dtype=float) - 0.5


def _ex1_f(x):
    return np.ones_like(np.asarray(x, dtype=float))


def _ex1_u_p15(x):
    x = np.asarray(x, dtype=float)
    return (x - x**4 * (2 * x**2 - 6 * x + 5)) / 240.0


def _ex1_u_prime_p15(x):
    x = np.asarray(x, dtype=float)
    return (1.0 - 12 * x**5 + 30 * x**4 - 20 * x**3) / 240.0


def _ex1_u_p2(x):
    x = np.asarray(x, dtype=float)
    return (x**4 - 2 * x**3 + x) / 24.0


def _ex1_u_prime_p2(x):
    x = np.asarray(x, dtype=float)
    return (4 * x**3 - 6 * x**2 + 1.0) / 24.0


# 닫힌 형태가 있는 p에서 u의 차수
_EX1_U_DEGREE = {1.5: 6, 2.0: 4}


def example1(p: float, n_panels: int | None = None, validate: bool = True) -> ExactPair:
    """예제 1: f = 1, v = x(x-1)/2 (p와 무관)

    p = 1.5, 2는 닫힌 형태, 그 외 p는 이중 적분 오라클로 u를 만듭니다.
    """
    q = conjugate_exponent(p)
    if p == 1.5:
        u, u_prime = _ex1_u_p15, _ex1_u_prime_p15
    elif p == 2.0:
        u, u_prime = _ex1_u_p2, _ex1_u_prime_p2
    else:
        oracle = oracle_u_from_v(_ex1_v, q, n_panels or config.oracle_panels)
        u, u_prime = oracle, oracle.derivative
    u_degree = _EX1_U_DEGREE.get(p)

    pair = ExactPair(
        u=u,
        u_prime=u_prime,
        v=_ex1_v,
        v_prime=_ex1_v_prime,
        f=_ex1_f,
        p=p,
        label=f"example1(p={p:g})",
        u_degree=u_degree,
        v_degree=2,
    )
    return _accept(pair, validate)


# === 예제 2: u = x^5/120 - x^3/36 + 7x/360 (p와 무관) ===

_EX2_SIGN_NOTE = (
    "v = -((x - x^3)/6)^(p-1) <= 0: u'' = x(x^2-1)/6 < 0 이므로 음의 부호만 v'' = f 를 만족합니다 "
    "(p = 3에서 양의 부호 x^2(x^4 - 2x^2 + 1)/36 은 v'' = -f)."
)


def _ex2_g(x):
    x = np.asarray(x, dtype=float)
    return np.maximum((x - x**3) / 6.0, 0.0)


def _ex2_u(x):
    x = np.asarray(x, dtype=float)
    return x**5 / 120.0 - x**3 / 36.0 + 7.0 * x / 360.0


def _ex2_u_prime(x):
    x = np.asarray(x, dtype=float)
    return x**4 / 24.0 - x**2 / 12.0 + 7.0 / 360.0


def example2(p: float, validate: bool = True) -> ExactPair:
    """예제 2: u 고정(5차식), v = -((x - x^3)/6)^(p-1), f = v''

    p = 3이면 f(x) = -5x^4/6 + 2x^2/3 - 1/18.
    2 <= p < 3 이면 f가 x = 0, 1에서 유계가 아님 (적분 가능).
    """
    conjugate_exponent(p)
    if p < 2:
        raise ValueError(f"예제 2는 p >= 2 에서만 정의됩니다 (p={p})")
    if p < 3:
        logger.warning(f"예제 2 (p={p}): f가 x = 0, 1 근방에서 유계가 아닙니다")

    def v(x):
        return -(_ex2_g(x) ** (p - 1.0))

    def v_prime(x):
        x = np.asarray(x, dtype=float)
        return (p - 1.0) * _ex2_g(x) ** (p - 2.0) * (x**2 / 2.0 - 1.0 / 6.0)

    def f(x):
        x = np.asarray(x, dtype=float)
        g = _ex2_g(x)
        first = x * (p - 1.0) * g ** (p - 2.0)
        if p == 2.0:
            return first
        with np.errstate(divide="ignore"):
            second = (p - 1.0) * (p - 2.0) * g ** (p - 3.0) * (x**2 / 2.0 - 1.0 / 6.0) ** 2
        return first - second

    pair = ExactPair(
        u=_ex2_u,
        u_prime=_ex2_u_prime,
        v=v,
        v_prime=v_prime,
        f=f,
        p=p,
        label=f"example2(p={p:g})",
        notes=(_EX2_SIGN_NOTE,),
        u_degree=5,
        v_degree=3 * int(p - 1) if float(p).is_integer() else None,
    )
    return _accept(pair, validate)


EXAMPLES: dict[int, Callable[[float], ExactPair]] = {
    1: example1,
    2: example2,
}


def get_example(number: int) -> Callable[[float], ExactPair]:
    """예제 번호로 정확해 생성 함수 조회"""
    if number not in EXAMPLES:
        raise ValueError(f"지원하지 않는 예제 번호: {number} (1, 2)")
    return EXAMPLES[number]
