"""Exception types raised across the package."""


class SvarlicError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SvarlicError, ValueError):
    """Operands have inconsistent shapes (branch counts, lag counts, ...)."""


class OrderTooLarge(SvarlicError, ValueError):
    """The autoregressive order K leaves no usable samples (N <= K)."""


class InsufficientSamples(SvarlicError):
    """Too few samples for the requested fit; the Gram matrix cannot be
    full rank. Least squares needs N - K >= M*K + 1, the direct
    inverse-Cholesky route needs N - K >= M*(K+1) + 1."""


class NotPositiveDefinite(SvarlicError):
    """A Hermitian matrix expected to be positive definite was not:
    a Cholesky pivot fell below the relative threshold."""


class RankDeficient(NotPositiveDefinite):
    """An estimator's Gram matrix is singular, signalling collinear
    regressors or rank-deficient residuals (e.g. a deterministic or
    duplicated branch)."""


class NumericalOverflow(SvarlicError):
    """A simulated sample exceeded the overflow guard; the model is
    unstable or was run too long."""
