"""Exact determinants of Hankel-type matrices of dying-rabbit sequences.

The package generates the generalized Fibonacci sequences C~_n^(k,l),
C_n^(k,l) and Miles' f_n^(k), builds the associated matrices, evaluates
their determinants exactly and compares them with the closed-form
evaluation. The numeric side (roots, Binet coefficients, symmetric
functions) checks each step of the closed-form derivation.
"""

from fibdet.errors import (
    AnalysisError,
    ConvergenceError,
    ParameterError,
    ShapeError,
)
from fibdet.recurrence import (
    Params,
    classic_fibonacci,
    miles_sequence,
    original_sequence,
    tilde_sequence,
)
from fibdet.matrices import (
    ExactMatrix,
    build_miles_matrix,
    build_original_matrix,
    build_tilde_matrix,
)
from fibdet.det import DetResult, cofactor_determinant, determinant
from fibdet.closed_form import (
    CaseLabel,
    PeriodReport,
    TailReport,
    alpha_period_analysis,
    beta_tail_analysis,
    classify,
    closed_det_original,
    closed_det_tilde,
    miles_closed,
    radical,
)
from fibdet.series import (
    BinetCoeffs,
    HSeries,
    IdentityCheck,
    RootSet,
    binet_coefficients,
    char_poly_eval,
    find_roots,
    h_coefficients,
    h_ell_minus_1,
    product_formula_det,
    schur_h_check,
    verify_root_identities,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "BinetCoeffs",
    "CaseLabel",
    "ConvergenceError",
    "DetResult",
    "ExactMatrix",
    "HSeries",
    "IdentityCheck",
    "ParameterError",
    "Params",
    "PeriodReport",
    "RootSet",
    "ShapeError",
    "TailReport",
    "alpha_period_analysis",
    "beta_tail_analysis",
    "binet_coefficients",
    "build_miles_matrix",
    "build_original_matrix",
    "build_tilde_matrix",
    "char_poly_eval",
    "classic_fibonacci",
    "classify",
    "closed_det_original",
    "closed_det_tilde",
    "cofactor_determinant",
    "determinant",
    "find_roots",
    "h_coefficients",
    "h_ell_minus_1",
    "miles_closed",
    "miles_sequence",
    "original_sequence",
    "product_formula_det",
    "radical",
    "schur_h_check",
    "tilde_sequence",
    "verify_root_identities",
]
