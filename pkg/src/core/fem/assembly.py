"""강성 행렬, 하중 벡터, 비선형 우변, 가중 질량 행렬 M(v) 조립

모든 조립은 요소 루프(요소 축으로 벡터화)로 국소 블록을 만든 뒤
띠 저장소에 분산(scatter)합니다. 결과는 입력의 순수 함수입니다.

부호 규약: 약형식 (v', psi') = -(f, psi) 에 맞춰 하중 벡터와 비선형 우변은
음수 부호를 포함해 반환합니다.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..common.errors import QuadratureError
from ..config import config
from .elements import QuadratureRule, gauss_rule
from .space import FemFunction, FemSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BandedSymMatrix:
    """대칭 띠 행렬 (하삼각 띠만 저장)

    LAPACK/scipy 하삼각 형식: band[i - j, j] = A[i, j] (i >= j),
    모양 (half_bandwidth + 1, dim).
    """

    band: np.ndarray

    def __post_init__(self):
        band = np.array(self.band, dtype=float)
        if band.ndim != 2 or band.shape[0] < 1:
            raise ValueError(f"띠 저장소 모양이 잘못되었습니다: {band.shape}")
        band.flags.writeable = False
        object.__setattr__(self, "band", band)

    @property
    def dim(self) -> int:
        return self.band.shape[1]

    @property
    def half_bandwidth(self) -> int:
        return self.band.shape[0] - 1

    @property
    def diagonal(self) -> np.ndarray:
        return self.band[0]

    def to_dense(self) -> np.ndarray:
        """밀집 행렬로 변환 (검증/테스트용)"""
        dense = np.diag(self.band[0])
        for k in range(1, min(self.half_bandwidth, self.dim - 1) + 1):
            off = self.band[k, : self.dim - k]
            dense += np.diag(off, -k) + np.diag(off, k)
        return dense

    def norm_inf(self) -> float:
        """무한대 노름 (행 절댓값 합의 최댓값)"""
        if self.dim == 0:
            return 0.0
        return float(np.max(apply(self._abs(), np.ones(self.dim))))

    def _abs(self) -> "BandedSymMatrix":
        return BandedSymMatrix(np.abs(self.band))

    def __matmul__(self, x):
        return apply(self, x)

    @classmethod
    def from_dense(cls, dense: np.ndarray, half_bandwidth: int) -> "BandedSymMatrix":
        """밀집 대칭 행렬의 하삼각 띠 추출"""
        dense = np.asarray(dense, dtype=float)
        dim = dense.shape[0]
        band = np.zeros((half_bandwidth + 1, dim))
        for k in range(half_bandwidth + 1):
            band[k, : dim - k] = np.diagonal(dense, -k)
        return cls(band)


def apply(matrix: BandedSymMatrix, x) -> np.ndarray:
    """띠 행렬-벡터 곱"""
    x = np.asarray(x, dtype=float)
    if x.shape != (matrix.dim,):
        raise ValueError(f"차원 불일치: 행렬 {matrix.dim}, 벡터 {x.shape}")
    dim = matrix.dim
    y = matrix.band[0] * x
    for k in range(1, min(matrix.half_bandwidth, dim - 1) + 1):
        off = matrix.band[k, : dim - k]
        y[k:] += off * x[: dim - k]
        y[: dim - k] += off * x[k:]
    return y


def default_nonlinear_points(degree: int, minimum: int = 8) -> int:
    """비선형 적분 기본 Gauss 점 수: max(degree + 1, minimum)"""
    return max(degree + 1, minimum)


def stiffness_rule(space: FemSpace) -> QuadratureRule:
    """강성 행렬을 정확히 적분하는 최소 규칙 (차수 2(degree-1))"""
    return gauss_rule(max(1, space.degree))


def _ordered(space: FemSpace, element_order) -> np.ndarray:
    n = space.mesh.n_elements
    if element_order is None:
        return np.arange(n)
    order = np.asarray(element_order, dtype=int)
    if order.shape != (n,) or not np.array_equal(np.sort(order), np.arange(n)):
        raise ValueError("element_order는 요소 번호의 순열이어야 합니다")
    return order


def _scatter_matrix(space: FemSpace, local: np.ndarray, element_order=None) -> BandedSymMatrix:
    """국소 블록 (n_elements, count, count)을 자유 자유도 띠 저장소로 분산"""
    order = _ordered(space, element_order)
    free = space.element_free_dofs[order]
    local = local[order]
    band = np.zeros((space.degree + 1, space.n_dofs_free))
    count = space.basis.count
    for i in range(count):
        for j in range(count):
            rows, cols = free[:, i], free[:, j]
            mask = (rows >= 0) & (cols >= 0) & (rows >= cols)
            np.add.at(band, (rows[mask] - cols[mask], cols[mask]), local[mask, i, j])
    return BandedSymMatrix(band)


def _scatter_vector(space: FemSpace, local: np.ndarray, element_order=None) -> np.ndarray:
    """국소 벡터 (n_elements, count)를 자유 자유도 벡터로 분산"""
    order = _ordered(space, element_order)
    free = space.element_free_dofs[order]
    local = local[order]
    out = np.zeros(space.n_dofs_free)
    mask = free >= 0
    np.add.at(out, free[mask], local[mask])
    return out


def _project(space: FemSpace, values: np.ndarray, quad: QuadratureRule, element_order=None) -> np.ndarray:
    """적분점 값 g (n_elements, m)에 대해 (g, phi_j) 계산"""
    phi = space.basis.values(quad.points)  # (m, count)
    h = space.mesh.lengths
    local = np.einsum("em,m,mi->ei", values, quad.weights, phi) * h[:, None]
    return _scatter_vector(space, local, element_order)


def _check_fn(space: FemSpace, fn: FemFunction) -> None:
    if fn.space is space:
        return
    same_mesh = np.array_equal(fn.space.mesh.node_coords, space.mesh.node_coords)
    if fn.space.degree != space.degree or not same_mesh:
        raise ValueError("유한요소 함수가 다른 공간에 속합니다")


def _check_q(q: float) -> None:
    if not q > 1:
        raise ValueError(f"지수 q는 1보다 커야 합니다: {q}")


def assemble_stiffness(
    space: FemSpace,
    quad: QuadratureRule | None = None,
    element_order=None,
) -> BandedSymMatrix:
    """강성 행렬 K_ij = (phi_i', phi_j')

    Args:
        space: 유한요소 공간
        quad: 적분 규칙 (None이면 정확한 최소 규칙)
        element_order: 조립 요소 순서 (순열, 기본은 왼쪽부터)

    Returns:
        BandedSymMatrix: 자유 자유도 위의 SPD 띠 행렬 (반대역폭 = degree)
    """
    quad = quad or stiffness_rule(space)
    if quad.exact_degree < 2 * (space.degree - 1):
        raise QuadratureError(
            f"{quad.size}점 규칙은 차수 {space.degree} 강성 적분에 부족합니다 "
            f"(필요 차수 {2 * (space.degree - 1)})"
        )
    dphi = space.basis.derivatives(quad.points)  # (m, count)
    reference = np.einsum("m,mi,mj->ij", quad.weights, dphi, dphi)
    local = reference[None, :, :] / space.mesh.lengths[:, None, None]
    K = _scatter_matrix(space, local, element_order)
    logger.debug(f"강성 행렬 조립: dim={K.dim}, half_bandwidth={K.half_bandwidth}")
    return K


def assemble_load(
    space: FemSpace,
    f: Callable,
    quad: QuadratureRule,
    element_order=None,
) -> np.ndarray:
    """하중 벡터 f_j = -(f, phi_j)"""
    values = np.asarray(f(space.quadrature_points(quad)), dtype=float)
    values = np.broadcast_to(values, (space.mesh.n_elements, quad.size))
    return -_project(space, values, quad, element_order)


def nonlinear_source(values: np.ndarray, q: float) -> np.ndarray:
    """sign(v)|v|^(q-1) (= |v|^(q-2) v, v = 0에서도 유한)"""
    return np.sign(values) * np.abs(values) ** (q - 1.0)


def assemble_nonlinear_rhs(
    space: FemSpace,
    v_h: FemFunction,
    q: float,
    quad: QuadratureRule,
    element_order=None,
) -> np.ndarray:
    """비선형 우변 b_j = -(sign(v_h)|v_h|^(q-1), phi_j)"""
    _check_q(q)
    _check_fn(space, v_h)
    values, _ = v_h.at_quadrature(quad)
    return -_project(space, nonlinear_source(values, q), quad, element_order)


def assemble_M(
    space: FemSpace,
    v_h: FemFunction,
    q: float,
    quad: QuadratureRule,
    clamp: float | None = None,
    element_order=None,
) -> BandedSymMatrix:
    """가중 질량 행렬 M_ij = (|v_h|^(q-2) phi_i, phi_j)

    q < 2이면 |v_h| < clamp 인 적분점의 가중치를 clamp^(q-2)로 제한합니다.
    clamp 기본값은 config.singular_clamp.
    """
    _check_q(q)
    _check_fn(space, v_h)
    if clamp is None:
        clamp = config.singular_clamp
    if not clamp > 0:
        raise ValueError(f"clamp는 양수여야 합니다: {clamp}")

    values, _ = v_h.at_quadrature(quad)
    magnitude = np.abs(values)
    if q < 2:
        magnitude = np.maximum(magnitude, clamp)
    weight = magnitude ** (q - 2.0)

    phi = space.basis.values(quad.points)
    h = space.mesh.lengths
    local = np.einsum("em,m,mi,mj->eij", weight, quad.weights, phi, phi) * h[:, None, None]
    return _scatter_matrix(space, local, element_order)
