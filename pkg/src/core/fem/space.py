"""전역 유한요소 공간: 자유도 번호, Dirichlet 소거, 점 평가"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .elements import QuadratureRule, ReferenceBasis, make_basis
from .mesh import Mesh1D


@dataclass(frozen=True, eq=False)
class FemSpace:
    """연속 구간별 다항식 공간 (양 끝 값 0)

    전역 번호는 왼쪽에서 오른쪽으로 연속: 요소 k는 자유도
    k*degree ... k*degree+degree 를 사용합니다. 양 끝 자유도는 소거되어
    자유 자유도 번호 = 전역 번호 - 1 입니다.
    """

    mesh: Mesh1D
    basis: ReferenceBasis

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def n_dofs_total(self) -> int:
        return self.mesh.n_elements * self.degree + 1

    @property
    def n_dofs_free(self) -> int:
        return self.n_dofs_total - 2

    @cached_property
    def dof_coords(self) -> np.ndarray:
        """모든 Lagrange 노드 좌표 (양 끝 포함)"""
        coords = np.empty(self.n_dofs_total)
        left = self.mesh.node_coords[:-1, None]
        local = left + self.mesh.lengths[:, None] * self.basis.node_positions[None, :-1]
        coords[:-1] = local.ravel()
        coords[-1] = self.mesh.b
        coords.flags.writeable = False
        return coords

    @property
    def free_dof_coords(self) -> np.ndarray:
        return self.dof_coords[1:-1]

    @cached_property
    def element_dofs(self) -> np.ndarray:
        """요소별 전역 자유도 번호, 모양 (n_elements, count)"""
        k = np.arange(self.mesh.n_elements)[:, None]
        dofs = k * self.degree + np.arange(self.basis.count)[None, :]
        dofs.flags.writeable = False
        return dofs

    @cached_property
    def element_free_dofs(self) -> np.ndarray:
        """요소별 자유 자유도 번호 (경계 자유도는 -1)"""
        free = self.element_dofs - 1
        free[(self.element_dofs == 0) | (self.element_dofs == self.n_dofs_total - 1)] = -1
        free.flags.writeable = False
        return free

    def quadrature_points(self, quad: QuadratureRule) -> np.ndarray:
        """요소별 물리 적분점, 모양 (n_elements, m)"""
        left = self.mesh.node_coords[:-1, None]
        return left + self.mesh.lengths[:, None] * quad.points[None, :]

    def zero(self) -> "FemFunction":
        return FemFunction(self, np.zeros(self.n_dofs_free))

    def __repr__(self) -> str:
        return (
            f"FemSpace(degree={self.degree}, n_elements={self.mesh.n_elements}, "
            f"n_dofs_free={self.n_dofs_free})"
        )


@dataclass(frozen=True, eq=False)
class FemFunction:
    """자유 자유도 계수로 표현한 유한요소 함수 (경계 값은 암묵적으로 0)"""

    space: FemSpace
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.shape != (self.space.n_dofs_free,):
            raise ValueError(
                f"계수 길이 불일치: {coeffs.shape} (자유 자유도 {self.space.n_dofs_free})"
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def full_coeffs(self) -> np.ndarray:
        """경계 자유도 0을 포함한 전체 계수"""
        return np.concatenate(([0.0], self.coeffs, [0.0]))

    def element_coeffs(self) -> np.ndarray:
        """요소별 국소 계수, 모양 (n_elements, count)"""
        return self.full_coeffs[self.space.element_dofs]

    def _local(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        mesh = self.space.mesh
        x = np.asarray(x, dtype=float)
        k = mesh.locate(x)
        h = mesh.lengths[k]
        t = (x - mesh.node_coords[k]) / h
        return k, t, h

    def __call__(self, x):
        """x에서의 값 (요소 경계에서 연속)"""
        k, t, _ = self._local(x)
        local = self.element_coeffs()[k]
        return np.sum(self.space.basis.values(t) * local, axis=-1)

    def derivative(self, x):
        """x에서의 도함수 (요소 경계에서는 오른쪽 요소 값)"""
        k, t, h = self._local(x)
        local = self.element_coeffs()[k]
        return np.sum(self.space.basis.derivatives(t) * local, axis=-1) / h

    def at_quadrature(self, quad: QuadratureRule) -> tuple[np.ndarray, np.ndarray]:
        """요소별 적분점에서의 (값, 도함수), 각각 모양 (n_elements, m)"""
        local = self.element_coeffs()
        values = local @ self.space.basis.values(quad.points).T
        derivs = (local @ self.space.basis.derivatives(quad.points).T) / self.space.mesh.lengths[:, None]
        return values, derivs

    def scaled(self, alpha: float) -> "FemFunction":
        return FemFunction(self.space, alpha * self.coeffs)


def build_space(mesh: Mesh1D, degree: int) -> FemSpace:
    """격자와 차수로 유한요소 공간 생성"""
    return FemSpace(mesh=mesh, basis=make_basis(degree))


def evaluate(fn: FemFunction, x):
    """유한요소 함수의 점 평가 (x는 [a, b] 안)"""
    return fn(x)


def interpolate(space: FemSpace, g: Callable) -> FemFunction:
    """내부 노드에서의 값으로 절점 보간 (경계 값은 버림)"""
    coords = space.free_dof_coords
    values = np.asarray(g(coords), dtype=float)
    return FemFunction(space, np.broadcast_to(values, coords.shape))
