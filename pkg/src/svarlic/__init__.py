"""Structural vector autoregression estimation via least squares or a
single large inverse Cholesky factor, with an exact multiply-count cost
model for comparing the two routes.
"""

from .complexity import (
    MultiplyCount,
    lic_multiply_count,
    ls_multiply_count,
    savings_ratio,
)
from .estimators import (
    FitComparison,
    coefficient_discrepancy,
    fit_both,
    fit_rvar_ls,
    fit_svar_lic,
    rvar_to_svar,
)
from .exceptions import (
    DimensionMismatch,
    InsufficientSamples,
    NotPositiveDefinite,
    NumericalOverflow,
    OrderTooLarge,
    RankDeficient,
    SvarlicError,
)
from .linalg import cholesky_lower, gram_hermitian, invert_lower, solve_hpd
from .model import (
    RvarCoefficients,
    SvarCoefficients,
    build_regressor_s,
    build_regressor_t,
    companion_matrix,
    companion_spectral_radius,
    rvar_residuals,
    svar_residuals,
    whitening_error,
)
from .synthetic import random_stable_svar, simulate_series

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "FitComparison",
    "InsufficientSamples",
    "MultiplyCount",
    "NotPositiveDefinite",
    "NumericalOverflow",
    "OrderTooLarge",
    "RankDeficient",
    "RvarCoefficients",
    "SvarCoefficients",
    "SvarlicError",
    "build_regressor_s",
    "build_regressor_t",
    "cholesky_lower",
    "coefficient_discrepancy",
    "companion_matrix",
    "companion_spectral_radius",
    "fit_both",
    "fit_rvar_ls",
    "fit_svar_lic",
    "gram_hermitian",
    "invert_lower",
    "lic_multiply_count",
    "ls_multiply_count",
    "random_stable_svar",
    "rvar_residuals",
    "rvar_to_svar",
    "savings_ratio",
    "simulate_series",
    "solve_hpd",
    "svar_residuals",
    "whitening_error",
    "__version__",
]
