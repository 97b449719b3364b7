"""유한요소 함수의 L2 / H1 오차 및 노름 (요소별 Gauss 적분)"""

from typing import Callable

import numpy as np

from ..fem.elements import gauss_rule
from ..fem.space import FemFunction, FemSpace


def _check_points(fn: FemFunction, quad_points: int) -> None:
    # 오차 피적분 함수는 다항식이 아니므로 최소 degree + 3 점
    if quad_points < fn.space.degree + 3:
        raise ValueError(
            f"오차 적분 점 수 부족: {quad_points} (차수 {fn.space.degree}는 {fn.space.degree + 3} 이상 필요)"
        )


def _integrate_squared(space: FemSpace, values: np.ndarray, quad_points: int) -> float:
    quad = gauss_rule(quad_points)
    return float(np.sqrt(np.sum((values**2 @ quad.weights) * space.mesh.lengths)))


def l2_error(fn: FemFunction, exact: Callable | None, quad_points: int) -> float:
    """||exact - fn||_L2 (exact가 None이면 ||fn||_L2)"""
    _check_points(fn, quad_points)
    quad = gauss_rule(quad_points)
    values, _ = fn.at_quadrature(quad)
    if exact is not None:
        values = np.asarray(exact(fn.space.quadrature_points(quad)), dtype=float) - values
    return _integrate_squared(fn.space, values, quad_points)


def h1_semi_error(fn: FemFunction, exact_prime: Callable | None, quad_points: int) -> float:
    """||exact' - fn'||_L2 (exact_prime이 None이면 ||fn'||_L2)"""
    _check_points(fn, quad_points)
    quad = gauss_rule(quad_points)
    _, derivs = fn.at_quadrature(quad)
    if exact_prime is not None:
        derivs = np.asarray(exact_prime(fn.space.quadrature_points(quad)), dtype=float) - derivs
    return _integrate_squared(fn.space, derivs, quad_points)


def l2_norm(fn: FemFunction, quad_points: int) -> float:
    return l2_error(fn, None, quad_points)


def h1_seminorm(fn: FemFunction, quad_points: int) -> float:
    return h1_semi_error(fn, None, quad_points)


def h1_norm(fn: FemFunction, quad_points: int) -> float:
    """전체 H1 노름 sqrt(||fn||^2 + ||fn'||^2)"""
    return float(np.hypot(l2_norm(fn, quad_points), h1_seminorm(fn, quad_points)))


def function_l2_norm(func: Callable, space: FemSpace, quad_points: int) -> float:
    """일반 함수의 L2 노름 (space의 격자 위 Gauss 적분)"""
    quad = gauss_rule(quad_points)
    values = np.asarray(func(space.quadrature_points(quad)), dtype=float)
    values = np.broadcast_to(values, (space.mesh.n_elements, quad.size))
    return _integrate_squared(space, values, quad_points)
