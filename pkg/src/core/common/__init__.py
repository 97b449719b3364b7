"""공통 유틸리티 모듈

프로젝트 전체에서 공유하는 예외, 수식 파서를 제공합니다.
"""

from .errors import (
    ConsistencyError,
    ExpressionError,
    MeshError,
    NotPositiveDefiniteError,
    QuadratureError,
)
from .expression import SourceExpression, parse_source

__all__ = [
    "ConsistencyError",
    "ExpressionError",
    "MeshError",
    "NotPositiveDefiniteError",
    "QuadratureError",
    "SourceExpression",
    "parse_source",
]
