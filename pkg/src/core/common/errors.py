"""해석기 예외 정의

입력 검증 오류는 ValueError, 수치 실패는 ArithmeticError 계열로 구분합니다.
CLI는 전자를 종료 코드 1, 후자를 종료 코드 2로 변환합니다.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..manufactured.exact import ConsistencyReport


class MeshError(ValueError):
    """잘못된 격자 (a >= b, 요소 수 0, 비단조 좌표)"""


class QuadratureError(ValueError):
    """지원하지 않거나 정확도가 부족한 적분 규칙"""


class ExpressionError(ValueError):
    """사용자 소스항 수식 파싱 실패"""


class NotPositiveDefiniteError(ArithmeticError):
    """Cholesky 피벗이 0 이하 (조립 오류 또는 퇴화 격자)"""


class ConsistencyError(ArithmeticError):
    """제조해가 강형식 방정식을 만족하지 않음"""

    def __init__(self, report: ConsistencyReport):
        self.report = report
        super().__init__(
            f"{report.label}: {report.failing_identity} 위반 "
            f"(x={report.worst_location:.6g}, defect={report.max_defect:.3e})"
        )
