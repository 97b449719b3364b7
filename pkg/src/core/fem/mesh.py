"""1차원 격자 (구간 [a, b]의 분할)"""

from dataclasses import dataclass

import numpy as np

from ..common.errors import MeshError


@dataclass(frozen=True, eq=False)
class Mesh1D:
    """구간 [a, b]를 요소로 나눈 격자

    node_coords는 요소 끝점 좌표 (순증가). 생성 후 변경되지 않으므로
    여러 스레드에서 공유해도 안전합니다.
    """

    node_coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.node_coords, dtype=float)
        if coords.ndim != 1 or coords.size < 2:
            raise MeshError(f"격자 노드는 2개 이상이어야 합니다 (받은 개수: {coords.size})")
        if not np.all(np.isfinite(coords)):
            raise MeshError("격자 좌표에 유한하지 않은 값이 있습니다")
        if np.any(np.diff(coords) <= 0):
            raise MeshError("격자 좌표는 순증가해야 합니다")
        coords = coords.copy()
        coords.flags.writeable = False
        object.__setattr__(self, "node_coords", coords)

    @property
    def a(self) -> float:
        return float(self.node_coords[0])

    @property
    def b(self) -> float:
        return float(self.node_coords[-1])

    @property
    def n_elements(self) -> int:
        return self.node_coords.size - 1

    @property
    def lengths(self) -> np.ndarray:
        """요소별 길이"""
        return np.diff(self.node_coords)

    @property
    def h_max(self) -> float:
        return float(self.lengths.max())

    def element_interval(self, k: int) -> tuple[float, float]:
        """k번째 요소의 (왼쪽, 오른쪽) 끝점"""
        if not 0 <= k < self.n_elements:
            raise IndexError(f"요소 인덱스 범위 초과: {k} (요소 수 {self.n_elements})")
        return float(self.node_coords[k]), float(self.node_coords[k + 1])

    def locate(self, x) -> np.ndarray:
        """x가 속한 요소 인덱스 (이진 탐색, 오른쪽 끝점은 마지막 요소)"""
        x = np.asarray(x, dtype=float)
        if np.any(x < self.a) or np.any(x > self.b):
            raise ValueError(f"격자 영역 [{self.a}, {self.b}] 밖의 점이 있습니다")
        k = np.searchsorted(self.node_coords, x, side="right") - 1
        return np.clip(k, 0, self.n_elements - 1)

    def __len__(self) -> int:
        return self.n_elements

    def __repr__(self) -> str:
        return f"Mesh1D(a={self.a}, b={self.b}, n_elements={self.n_elements}, h_max={self.h_max:.3g})"


def build_uniform(a: float, b: float, n: int) -> Mesh1D:
    """균일 격자 생성

    Args:
        a: 왼쪽 끝점
        b: 오른쪽 끝점
        n: 요소 수

    Returns:
        Mesh1D: 길이 (b-a)/n 인 요소 n개
    """
    if not a < b:
        raise MeshError(f"구간 끝점은 a < b 여야 합니다: a={a}, b={b}")
    if int(n) != n or n < 1:
        raise MeshError(f"요소 수는 1 이상의 정수여야 합니다: {n}")
    return Mesh1D(np.linspace(a, b, int(n) + 1))


def from_nodes(coords) -> Mesh1D:
    """임의(비균일) 노드 좌표로 격자 생성"""
    return Mesh1D(np.asarray(coords, dtype=float))


def element_interval(mesh: Mesh1D, k: int) -> tuple[float, float]:
    """k번째 요소 구간"""
    return mesh.element_interval(k)
