"""오차 노름, 실험적 수렴 차수, 수렴 실험"""

from ..models.convergence import ConvergenceTable, ErrorReport, eoc
from .convergence import compute_errors, error_points, lies_in_space, run_convergence
from .export import sample_frame, write_plot_data, write_samples
from .norms import function_l2_norm, h1_norm, h1_semi_error, h1_seminorm, l2_error, l2_norm
from .plotting import plot_convergence, plot_solutions

__all__ = [
    "ConvergenceTable",
    "ErrorReport",
    "compute_errors",
    "eoc",
    "error_points",
    "function_l2_norm",
    "h1_norm",
    "h1_semi_error",
    "h1_seminorm",
    "l2_error",
    "l2_norm",
    "lies_in_space",
    "plot_convergence",
    "plot_solutions",
    "run_convergence",
    "sample_frame",
    "write_plot_data",
    "write_samples",
]
