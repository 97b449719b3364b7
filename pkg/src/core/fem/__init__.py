"""1차원 유한요소 구성 요소

격자, 참조 기저/적분, 전역 공간, 조립, 띠 Cholesky 풀이.
"""

from .assembly import (
    BandedSymMatrix,
    apply,
    assemble_load,
    assemble_M,
    assemble_nonlinear_rhs,
    assemble_stiffness,
)
from .elements import QuadratureRule, ReferenceBasis, eval_basis, eval_basis_deriv, gauss_rule, make_basis
from .linalg import CholeskyFactor, factor, residual, solve
from .mesh import Mesh1D, build_uniform, element_interval, from_nodes
from .space import FemFunction, FemSpace, build_space, evaluate, interpolate

__all__ = [
    "BandedSymMatrix",
    "CholeskyFactor",
    "FemFunction",
    "FemSpace",
    "Mesh1D",
    "QuadratureRule",
    "ReferenceBasis",
    "apply",
    "assemble_M",
    "assemble_load",
    "assemble_nonlinear_rhs",
    "assemble_stiffness",
    "build_space",
    "build_uniform",
    "element_interval",
    "eval_basis",
    "eval_basis_deriv",
    "evaluate",
    "factor",
    "from_nodes",
    "gauss_rule",
    "interpolate",
    "make_basis",
    "residual",
    "solve",
]
