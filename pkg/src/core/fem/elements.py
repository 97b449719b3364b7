"""참조 요소 [0, 1]의 Lagrange 기저와 Gauss-Legendre 적분 규칙"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..common.errors import QuadratureError

logger = logging.getLogger(__name__)

# 검증된 최대 기저 차수 (이보다 크면 경고만 출력)
MAX_TESTED_DEGREE = 3
MAX_GAUSS_POINTS = 20

# [-1, 1] 위의 Gauss-Legendre 점/가중치 (m <= 5)
_GAUSS_TABLE: dict[int, tuple[list[float], list[float]]] = {
    1: ([0.0], [2.0]),
    2: (
        [-1 / np.sqrt(3), 1 / np.sqrt(3)],
        [1.0, 1.0],
    ),
    3: (
        [-np.sqrt(3 / 5), 0.0, np.sqrt(3 / 5)],
        [5 / 9, 8 / 9, 5 / 9],
    ),
    4: (
        [
            -np.sqrt(3 / 7 + 2 / 7 * np.sqrt(6 / 5)),
            -np.sqrt(3 / 7 - 2 / 7 * np.sqrt(6 / 5)),
            np.sqrt(3 / 7 - 2 / 7 * np.sqrt(6 / 5)),
            np.sqrt(3 / 7 + 2 / 7 * np.sqrt(6 / 5)),
        ],
        [
            (18 - np.sqrt(30)) / 36,
            (18 + np.sqrt(30)) / 36,
            (18 + np.sqrt(30)) / 36,
            (18 - np.sqrt(30)) / 36,
        ],
    ),
    5: (
        [
            -np.sqrt(5 + 2 * np.sqrt(10 / 7)) / 3,
            -np.sqrt(5 - 2 * np.sqrt(10 / 7)) / 3,
            0.0,
            np.sqrt(5 - 2 * np.sqrt(10 / 7)) / 3,
            np.sqrt(5 + 2 * np.sqrt(10 / 7)) / 3,
        ],
        [
            (322 - 13 * np.sqrt(70)) / 900,
            (322 + 13 * np.sqrt(70)) / 900,
            128 / 225,
            (322 + 13 * np.sqrt(70)) / 900,
            (322 - 13 * np.sqrt(70)) / 900,
        ],
    ),
}


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class ReferenceBasis:
    """[0, 1] 위 등간격 노드의 Lagrange 기저 (차수 degree)"""

    degree: int
    node_positions: np.ndarray

    @property
    def count(self) -> int:
        return self.degree + 1

    def values(self, t) -> np.ndarray:
        """기저 함수값, 모양 t.shape + (count,)"""
        t = np.asarray(t, dtype=float)[..., None]
        nodes = self.node_positions
        out = np.ones(t.shape[:-1] + (self.count,))
        for i in range(self.count):
            for j in range(self.count):
                if j != i:
                    out[..., i] *= ((t - nodes[j]) / (nodes[i] - nodes[j]))[..., 0]
        return out

    def derivatives(self, t) -> np.ndarray:
        """참조 좌표에 대한 기저 도함수, 모양 t.shape + (count,)"""
        t = np.asarray(t, dtype=float)
        nodes = self.node_positions
        out = np.zeros(t.shape + (self.count,))
        for i in range(self.count):
            for k in range(self.count):
                if k == i:
                    continue
                term = np.full(t.shape, 1.0 / (nodes[i] - nodes[k]))
                for j in range(self.count):
                    if j != i and j != k:
                        term = term * (t - nodes[j]) / (nodes[i] - nodes[j])
                out[..., i] += term
        return out


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """[0, 1] 위 Gauss-Legendre 적분 규칙"""

    points: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.points.size

    @property
    def exact_degree(self) -> int:
        """정확히 적분하는 다항식 최고 차수 (2m - 1)"""
        return 2 * self.size - 1

    def integrate(self, func) -> float:
        """[0, 1]에서 func 적분"""
        return float(np.dot(self.weights, func(self.points)))


def make_basis(degree: int) -> ReferenceBasis:
    """등간격 Lagrange 기저 생성

    Args:
        degree: 다항식 차수 (1 이상)

    Returns:
        ReferenceBasis: 노드 0, 1/degree, ..., 1
    """
    if int(degree) != degree or degree < 1:
        raise ValueError(f"기저 차수는 1 이상의 정수여야 합니다: {degree}")
    degree = int(degree)
    if degree > MAX_TESTED_DEGREE:
        logger.warning(f"기저 차수 {degree}는 검증 범위(<= {MAX_TESTED_DEGREE}) 밖입니다")
    return ReferenceBasis(degree=degree, node_positions=_frozen(np.linspace(0.0, 1.0, degree + 1)))


def eval_basis(basis: ReferenceBasis, t) -> np.ndarray:
    """t에서 모든 기저 함수값 (합 = 1)"""
    return basis.values(t)


def eval_basis_deriv(basis: ReferenceBasis, t) -> np.ndarray:
    """t에서 모든 기저 도함수값 (합 = 0)"""
    return basis.derivatives(t)


@lru_cache(maxsize=None)
def gauss_rule(m: int) -> QuadratureRule:
    """m점 Gauss-Legendre 규칙을 [0, 1]로 변환

    m <= 5는 표값, 그 이상은 numpy leggauss 사용.
    """
    if int(m) != m or not 1 <= m <= MAX_GAUSS_POINTS:
        raise QuadratureError(f"지원하지 않는 Gauss 점 수: {m} (1~{MAX_GAUSS_POINTS})")
    m = int(m)
    if m in _GAUSS_TABLE:
        x, w = (np.asarray(v, dtype=float) for v in _GAUSS_TABLE[m])
    else:
        x, w = np.polynomial.legendre.leggauss(m)
    return QuadratureRule(points=_frozen((x + 1.0) / 2.0), weights=_frozen(w / 2.0))
