"""혼합 유한요소 해석기"""

from .mixed import ProblemConfig, conjugate_exponent, scaled_source, solve_mixed, stability_check

__all__ = [
    "ProblemConfig",
    "conjugate_exponent",
    "scaled_source",
    "solve_mixed",
    "stability_check",
]
