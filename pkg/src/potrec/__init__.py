"""Logarithmic potentials of Legendre-product densities over a square.

The work happens in bivariate three-term recurrences that fill triangular
tables of log-kernel and Cauchy-kernel moments in one of two precisions;
everything else here (interval sequences, branch-aware complex helpers,
double-word arithmetic, quadrature oracles, structure diagnostics) exists
to seed, accelerate or validate those tables.
"""

from .complexbranch import CDW, cdw
from .doubledouble import DW, dw
from .errors import AccuracyError, CapacityError, SingularPointError
from .matrices import (
    build_matrix,
    jacobi_singular_values,
    numerical_rank_F,
    sylvester_residual_log,
    sylvester_residual_stieltjes,
)
from .quadrature import ref_line, ref_line_seq, ref_square, ref_square_table
from .square import (
    FAR_FIELD_BOUND,
    MAX_TOTAL_DEGREE,
    CoeffMatrix,
    DWTriTable,
    PotentialResult,
    TriTable,
    log_table,
    potential_eval,
    stieltjes_table,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CapacityError",
    "SingularPointError",
    "CDW",
    "DW",
    "cdw",
    "dw",
    "CoeffMatrix",
    "DWTriTable",
    "PotentialResult",
    "TriTable",
    "FAR_FIELD_BOUND",
    "MAX_TOTAL_DEGREE",
    "log_table",
    "stieltjes_table",
    "potential_eval",
    "ref_line",
    "ref_line_seq",
    "ref_square",
    "ref_square_table",
    "build_matrix",
    "jacobi_singular_values",
    "numerical_rank_F",
    "sylvester_residual_log",
    "sylvester_residual_stieltjes",
    "__version__",
]
