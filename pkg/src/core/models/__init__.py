"""pbeam 결과 모델"""

from .convergence import CSV_COLUMNS, QUANTITIES, ConvergenceTable, ErrorReport, eoc
from .solution import MixedSolution, StabilityReport

__all__ = [
    "CSV_COLUMNS",
    "QUANTITIES",
    "ConvergenceTable",
    "ErrorReport",
    "MixedSolution",
    "StabilityReport",
    "eoc",
]
