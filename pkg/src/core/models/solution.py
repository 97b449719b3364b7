"""혼합 해석 결과 모델"""

from dataclasses import dataclass

import numpy as np

from ..fem.space import FemFunction

# 직접 풀이 잔차 허용치
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MixedSolution:
    """이산 혼합 해 (u_h, v_h)와 풀이 잔차"""

    u_h: FemFunction
    v_h: FemFunction
    residual_v: float  # ||K v - f||_inf
    residual_u: float  # ||K u - b||_inf
    wall_time: float  # 초 단위
    load: np.ndarray  # f 벡터 (-(f, phi_j))
    nonlinear_rhs: np.ndarray  # b 벡터 (-(|v_h|^(q-2) v_h, phi_j))

    @property
    def space(self):
        return self.v_h.space

    @property
    def is_converged(self) -> bool:
        """두 잔차가 직접 풀이 허용치 이내인지"""
        return self.residual_v <= RESIDUAL_TOL and self.residual_u <= RESIDUAL_TOL


@dataclass(frozen=True)
class StabilityReport:
    """안정성 추정 ||v_h|| <= C||f||, ||u_h|| <= C||f||^(q-1) 확인용 노름"""

    v_h1: float
    u_h1: float
    f_l2: float
    v_ratio: float | None  # ||v_h||_H1 / ||f||_L2 (f = 0이면 None)
    u_ratio: float | None  # ||u_h||_H1 / ||f||_L2^(q-1)
