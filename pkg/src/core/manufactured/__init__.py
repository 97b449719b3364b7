"""정확해(제조해) 족: 예제 1, 2와 이중 적분 오라클"""

from .exact import (
    EXAMPLES,
    ConsistencyReport,
    ExactPair,
    check_consistency,
    chebyshev_points,
    example1,
    example2,
    get_example,
)
from .oracle import DoubleIntegralOracle, oracle_u_from_v

__all__ = [
    "EXAMPLES",
    "ConsistencyReport",
    "DoubleIntegralOracle",
    "ExactPair",
    "check_consistency",
    "chebyshev_points",
    "example1",
    "example2",
    "get_example",
    "oracle_u_from_v",
]
