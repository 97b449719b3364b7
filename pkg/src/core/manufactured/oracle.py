"""u'' = sign(v)|v|^(q-1), u(0) = u(1) = 0 의 이중 적분 오라클

닫힌 형태가 없는 경우(예: f = 1, p != 1.5, 2)의 정확해를 만듭니다.

    G1(x) = ∫_0^x g(s) ds,   G2(x) = ∫_0^x s g(s) ds
    ∫_0^x ∫_0^t g(s) ds dt = x G1(x) - G2(x)
    u(x)  = x G1(x) - G2(x) - x C,   C = G1(1) - G2(1)
    u'(x) = G1(x) - C

G1, G2는 합성 Gauss 패널로 누적 적분하고, 임의 x에서는 마지막
부분 패널만 추가로 적분합니다.
"""

import logging
from typing import Callable

import numpy as np

from ..fem.assembly import nonlinear_source
from ..fem.elements import gauss_rule

logger = logging.getLogger(__name__)

MIN_PANELS = 10_000
PANEL_POINTS = 8


class DoubleIntegralOracle:
    """[0, 1] 위에서 u'' = g, u(0) = u(1) = 0 의 수치해 (호출 가능)"""

    def __init__(self, g: Callable, n_panels: int = MIN_PANELS):
        if n_panels < MIN_PANELS:
            raise ValueError(f"패널 수는 {MIN_PANELS} 이상이어야 합니다: {n_panels}")
        self._g = g
        self._quad = gauss_rule(PANEL_POINTS)
        self._edges = np.linspace(0.0, 1.0, n_panels + 1)

        left = self._edges[:-1, None]
        width = np.diff(self._edges)[:, None]
        s = left + width * self._quad.points[None, :]
        gs = np.asarray(g(s), dtype=float)
        panel_g1 = (gs @ self._quad.weights) * width[:, 0]
        panel_g2 = ((s * gs) @ self._quad.weights) * width[:, 0]

        self._g1 = np.concatenate(([0.0], np.cumsum(panel_g1)))
        self._g2 = np.concatenate(([0.0], np.cumsum(panel_g2)))
        self._c = self._g1[-1] - self._g2[-1]
        logger.debug(f"이중 적분 오라클 생성: panels={n_panels}, C={self._c:.6e}")

    def _moments(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)
        if np.any(x < 0.0) or np.any(x > 1.0):
            raise ValueError("오라클은 [0, 1] 안에서만 평가할 수 있습니다")
        k = np.clip(np.searchsorted(self._edges, x, side="right") - 1, 0, self._edges.size - 2)
        left = np.asarray(self._edges[k])
        width = np.asarray(x - left)

        # 부분 패널 [left, x]
        s = left[..., None] + width[..., None] * self._quad.points
        gs = np.asarray(self._g(s), dtype=float)
        g1 = self._g1[k] + (gs @ self._quad.weights) * width
        g2 = self._g2[k] + ((s * gs) @ self._quad.weights) * width
        return x, g1, g2

    def __call__(self, x):
        x, g1, g2 = self._moments(x)
        return x * g1 - g2 - x * self._c

    def derivative(self, x):
        _, g1, _ = self._moments(x)
        return g1 - self._c


def oracle_u_from_v(v: Callable, q: float, n_panels: int = MIN_PANELS) -> DoubleIntegralOracle:
    """v로부터 u'' = sign(v)|v|^(q-1), u(0)=u(1)=0 인 u 생성

    Args:
        v: 연속 함수 (벡터화)
        q: 켤레 지수 (> 1)
        n_panels: 합성 Gauss 패널 수 (>= 10^4)

    Returns:
        DoubleIntegralOracle: u(x) 호출, .derivative(x) 로 u'(x)
    """
    if not q > 1:
        raise ValueError(f"지수 q는 1보다 커야 합니다: {q}")

    def g(s):
        return nonlinear_source(np.asarray(v(s), dtype=float), q)

    return DoubleIntegralOracle(g, n_panels)
