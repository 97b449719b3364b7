"""수렴 실험: 격자 세분화별 오차와 실험적 수렴 차수(EOC)"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from ..config import config
from ..fem.elements import MAX_GAUSS_POINTS
from ..fem.space import FemSpace, interpolate
from ..manufactured.exact import ExactPair
from ..models.convergence import ConvergenceTable, ErrorReport
from ..models.solution import MixedSolution
from ..solver.mixed import ProblemConfig, solve_mixed
from .norms import h1_semi_error, l2_error

logger = logging.getLogger(__name__)


def error_points(cfg: ProblemConfig) -> int:
    """오차 적분 점 수: 해석기 적분 점의 2배 (최대 20)"""
    return min(2 * cfg.nonlinear_points, MAX_GAUSS_POINTS)


def lies_in_space(
    space: FemSpace,
    exact: Callable,
    quad_points: int,
    poly_degree: int | None,
    tol: float | None = None,
) -> bool:
    """정확해가 V_h 안에 있는지

    차수를 아는 다항식이고 그 차수가 기저 차수 이하일 때만 True 후보가 되며,
    절점 보간의 상대 L2 오차(<= tol)로 한 번 더 확인합니다. 차수를 모르는 함수는
    격자와 무관하게 V_h 밖으로 봅니다.
    """
    if poly_degree is None or poly_degree > space.degree:
        return False
    tol = config.reproduction_tol if tol is None else tol
    interpolant = interpolate(space, exact)
    error = l2_error(interpolant, exact, quad_points)
    norm = l2_error(space.zero(), exact, quad_points)
    if norm == 0:
        return error == 0
    return error <= tol * norm


def compute_errors(sol: MixedSolution, pair: ExactPair, quad_points: int) -> ErrorReport:
    """해 하나의 L2 / H1 반노름 오차"""
    space = sol.space
    return ErrorReport(
        n_elements=space.mesh.n_elements,
        h=space.mesh.h_max,
        err_u_l2=l2_error(sol.u_h, pair.u, quad_points),
        err_v_l2=l2_error(sol.v_h, pair.v, quad_points),
        err_u_h1=h1_semi_error(sol.u_h, pair.u_prime, quad_points),
        err_v_h1=h1_semi_error(sol.v_h, pair.v_prime, quad_points),
        u_reproduced=lies_in_space(space, pair.u, quad_points, pair.u_degree),
        v_reproduced=lies_in_space(space, pair.v, quad_points, pair.v_degree),
        wall_time=sol.wall_time,
    )


def _run_single(pair: ExactPair, degree: int, n: int, quad_points: int | None) -> ErrorReport:
    cfg = ProblemConfig(
        p=pair.p,
        source=pair.f,
        domain=pair.domain,
        n_elements=n,
        degree=degree,
        quad_points=quad_points,
    )
    sol = solve_mixed(cfg)
    report = compute_errors(sol, pair, error_points(cfg))
    logger.info(
        f"[{pair.label}] degree={degree} n={n}: "
        f"u_l2={report.err_u_l2:.3e} v_l2={report.err_v_l2:.3e} "
        f"res=({sol.residual_v:.1e}, {sol.residual_u:.1e}) {sol.wall_time:.3f}s"
    )
    return report


def run_convergence(
    p: float,
    family: Callable[[float], ExactPair] | ExactPair,
    degree: int,
    n_list: list[int],
    quad_points: int | None = None,
    parallel: bool = False,
    max_workers: int | None = None,
) -> ConvergenceTable:
    """격자 목록마다 한 번씩 풀고 EOC 표 생성

    Args:
        p: 지수 (> 1)
        family: p -> ExactPair 생성 함수 (예: example1) 또는 ExactPair
        degree: 기저 차수
        n_list: 증가하는 요소 수 목록 (2개 이상)
        quad_points: 비선형 적분 점 수 (None이면 기본값)
        parallel: 격자별 풀이를 스레드 풀에서 실행
        max_workers: 스레드 수 (None이면 설정값/executor 기본값)

    Returns:
        ConvergenceTable: n 순서로 정렬된 행과 EOC 열
    """
    n_list = [int(n) for n in n_list]
    if len(n_list) < 2:
        raise ValueError(f"수렴 실험에는 격자가 2개 이상 필요합니다: {n_list}")
    if any(b <= a for a, b in zip(n_list, n_list[1:])) or n_list[0] < 1:
        raise ValueError(f"n_list는 1 이상의 순증가 목록이어야 합니다: {n_list}")

    pair = family if isinstance(family, ExactPair) else family(p)
    if pair.p != p:
        raise ValueError(f"정확해 쌍의 p({pair.p})와 요청한 p({p})가 다릅니다")

    logger.info(f"수렴 실험 시작: {pair.label}, degree={degree}, n={n_list}, parallel={parallel}")
    if parallel:
        workers = max_workers or config.max_workers
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_single, pair, degree, n, quad_points) for n in n_list]
            # 제출 순서(= n 순서)로 결합
            rows = [future.result() for future in futures]
    else:
        rows = [_run_single(pair, degree, n, quad_points) for n in n_list]

    table = ConvergenceTable.build(rows, label=f"{pair.label}, degree={degree}")
    for quantity, column in table.eoc.items():
        logger.info(f"  EOC {quantity}: {['-' if e is None else f'{e:.3f}' for e in column]}")
    return table
