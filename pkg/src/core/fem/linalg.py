"""띠 SPD 행렬의 Cholesky 분해와 직접 풀이"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_solve_banded, cholesky_banded

from ..common.errors import NotPositiveDefiniteError
from .assembly import BandedSymMatrix, apply

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """하삼각 Cholesky 인자 L (띠 저장, K = L L^T)

    원본 행렬을 함께 보관해 잔차 계산에 사용합니다. 한 번 분해한 인자는
    변경되지 않으므로 여러 우변에 재사용할 수 있습니다.
    """

    lower_band: np.ndarray
    matrix: BandedSymMatrix

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def half_bandwidth(self) -> int:
        return self.matrix.half_bandwidth

    def to_dense(self) -> np.ndarray:
        """밀집 L (검증용)"""
        L = np.zeros((self.dim, self.dim))
        for k in range(self.lower_band.shape[0]):
            idx = np.arange(self.dim - k)
            L[idx + k, idx] = self.lower_band[k, : self.dim - k]
        return L

    def reconstruct(self) -> np.ndarray:
        """L L^T (검증용)"""
        L = self.to_dense()
        return L @ L.T


def factor(K: BandedSymMatrix) -> CholeskyFactor:
    """띠 Cholesky 분해 (피벗팅 없음)

    Raises:
        NotPositiveDefiniteError: 피벗이 0 이하인 경우
    """
    if K.dim == 0:
        return CholeskyFactor(lower_band=np.zeros_like(K.band), matrix=K)
    try:
        lower = cholesky_banded(K.band, lower=True)
    except LinAlgError as e:
        raise NotPositiveDefiniteError(f"행렬이 양의 정부호가 아닙니다 (dim={K.dim}): {e}") from e
    except ValueError as e:
        # 비유한 값 등
        raise NotPositiveDefiniteError(f"Cholesky 분해 실패 (dim={K.dim}): {e}") from e
    lower.flags.writeable = False
    return CholeskyFactor(lower_band=lower, matrix=K)


def solve(chol: CholeskyFactor, rhs) -> np.ndarray:
    """분해된 인자로 K x = rhs 풀이"""
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (chol.dim,):
        raise ValueError(f"차원 불일치: 행렬 {chol.dim}, 우변 {rhs.shape}")
    if chol.dim == 0:
        return np.zeros(0)
    return cho_solve_banded((chol.lower_band, True), rhs)


def residual(K: BandedSymMatrix, x, rhs) -> float:
    """잔차 ||K x - rhs||_inf"""
    rhs = np.asarray(rhs, dtype=float)
    if rhs.size == 0:
        return 0.0
    return float(np.max(np.abs(apply(K, x) - rhs)))


def residual_bound(K: BandedSymMatrix, x, rhs, tol: float = 1e-12) -> float:
    """후방 안정 풀이의 허용 잔차 tol * (||K|| ||x|| + ||rhs||)"""
    x = np.asarray(x, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.size == 0:
        return 0.0
    return tol * (K.norm_inf() * float(np.max(np.abs(x))) + float(np.max(np.abs(rhs))))
