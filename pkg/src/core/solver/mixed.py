"""혼합 유한요소 2단계 풀이

p-biharmonic 방정식 (|u''|^(p-2) u'')'' = f 를 보조 변수
v = |u''|^(p-2) u'' 로 분리하면 하삼각 구조의 두 Poisson 문제가 됩니다.

    v'' = f,                       v(a) = v(b) = 0
    u'' = |v|^(q-2) v,  1/p+1/q=1, u(a) = u(b) = 0

이산화하면 K v = f, K u = b(v) 로 같은 강성 행렬 K를 공유하므로
한 번의 Cholesky 분해로 두 선형계를 차례로 풉니다 (반복법 없음).
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..config import config
from ..fem.assembly import (
    assemble_load,
    assemble_nonlinear_rhs,
    assemble_stiffness,
    default_nonlinear_points,
)
from ..fem.elements import MAX_GAUSS_POINTS, gauss_rule
from ..fem.linalg import factor, residual, solve
from ..fem.mesh import build_uniform
from ..fem.space import FemFunction, build_space
from ..models.solution import MixedSolution, StabilityReport

logger = logging.getLogger(__name__)


def conjugate_exponent(p: float) -> float:
    """켤레 지수 q = p / (p - 1)"""
    if not p > 1:
        raise ValueError(f"p must exceed 1 (p={p})")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ProblemConfig:
    """단일 문제 설정

    q는 저장하지 않고 p에서 매번 계산합니다.
    """

    p: float
    source: Callable
    domain: tuple[float, float] = (0.0, 1.0)
    n_elements: int = 10
    degree: int = 1
    quad_points: int | None = None  # None이면 max(degree + 1, min_quad_points)

    def __post_init__(self):
        conjugate_exponent(self.p)
        a, b = self.domain
        if not a < b:
            raise ValueError(f"구간 끝점은 a < b 여야 합니다: {self.domain}")
        if int(self.n_elements) != self.n_elements or self.n_elements < 1:
            raise ValueError(f"요소 수는 1 이상의 정수여야 합니다: {self.n_elements}")
        if int(self.degree) != self.degree or self.degree < 1:
            raise ValueError(f"기저 차수는 1 이상의 정수여야 합니다: {self.degree}")
        if self.quad_points is not None and not self.degree + 1 <= self.quad_points <= MAX_GAUSS_POINTS:
            raise ValueError(
                f"적분 점 수는 {self.degree + 1}~{MAX_GAUSS_POINTS} 사이여야 합니다: {self.quad_points}"
            )

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def nonlinear_points(self) -> int:
        if self.quad_points is not None:
            return self.quad_points
        return default_nonlinear_points(self.degree, config.min_quad_points)


def solve_mixed(cfg: ProblemConfig, element_order=None) -> MixedSolution:
    """K v = f, K u = b(v) 를 차례로 풀이

    Args:
        cfg: 문제 설정
        element_order: 조립 요소 순서 (유일성 확인용 순열)

    Returns:
        MixedSolution: (u_h, v_h)와 두 잔차

    Raises:
        NotPositiveDefiniteError: 강성 행렬 분해 실패
    """
    start = time.perf_counter()
    mesh = build_uniform(cfg.domain[0], cfg.domain[1], cfg.n_elements)
    space = build_space(mesh, cfg.degree)
    quad = gauss_rule(cfg.nonlinear_points)

    K = assemble_stiffness(space, element_order=element_order)
    chol = factor(K)

    # 1단계: p와 무관한 Poisson 문제
    load = assemble_load(space, cfg.source, quad, element_order=element_order)
    v_h = FemFunction(space, solve(chol, load))
    residual_v = residual(K, v_h.coeffs, load)

    # 2단계: 같은 인자 재사용, f는 더 이상 읽지 않음
    rhs = assemble_nonlinear_rhs(space, v_h, cfg.q, quad, element_order=element_order)
    u_h = FemFunction(space, solve(chol, rhs))
    residual_u = residual(K, u_h.coeffs, rhs)

    wall_time = time.perf_counter() - start
    logger.debug(
        f"solve_mixed: p={cfg.p}, degree={cfg.degree}, n={cfg.n_elements}, "
        f"res_v={residual_v:.2e}, res_u={residual_u:.2e}, {wall_time * 1000:.1f}ms"
    )
    solution = MixedSolution(
        u_h=u_h,
        v_h=v_h,
        residual_v=residual_v,
        residual_u=residual_u,
        wall_time=wall_time,
        load=load,
        nonlinear_rhs=rhs,
    )
    if not solution.is_converged:
        logger.warning(f"직접 풀이 잔차가 큽니다: res_v={residual_v:.2e}, res_u={residual_u:.2e}")
    return solution


def stability_check(sol: MixedSolution, cfg: ProblemConfig) -> StabilityReport:
    """||v_h||_H1, ||u_h||_H1, ||f||_L2 와 비율 계산"""
    # analysis 패키지가 solver를 import하므로 지연 import
    from ..analysis.norms import function_l2_norm, h1_norm

    points = min(2 * cfg.nonlinear_points, MAX_GAUSS_POINTS)
    v_h1 = h1_norm(sol.v_h, points)
    u_h1 = h1_norm(sol.u_h, points)
    f_l2 = function_l2_norm(cfg.source, sol.space, points)

    if f_l2 > 0:
        v_ratio = v_h1 / f_l2
        u_ratio = u_h1 / f_l2 ** (cfg.q - 1.0)
    else:
        v_ratio = u_ratio = None

    return StabilityReport(v_h1=v_h1, u_h1=u_h1, f_l2=f_l2, v_ratio=v_ratio, u_ratio=u_ratio)


def scaled_source(source: Callable, alpha: float) -> Callable:
    """alpha * f (스케일링 법칙 확인용)"""

    def scaled(x):
        return alpha * np.asarray(source(x), dtype=float)

    return scaled
