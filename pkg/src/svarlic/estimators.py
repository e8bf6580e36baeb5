"""The two estimation routes for structural VAR coefficients.

Route 1, least squares: fit the reduced form by solving the normal
equations ``A (S S^H) = X S^H``, then whiten the residuals with the inverse
Cholesky factor of ``V V^H`` and rescale every coefficient by it
(`fit_rvar_ls` followed by `rvar_to_svar`).

Route 2, direct: build the taller stacked matrix T (lags plus current
samples), take the inverse of the lower Cholesky factor of ``T T^H``, and
read the structural coefficients straight out of its bottom block rows
(`fit_svar_lic`). One factorization of a slightly larger matrix replaces
the whole least-squares chain.

Under the shared positive-diagonal factor convention the two routes agree
exactly in exact arithmetic; `fit_both` runs them side by side and reports
the floating-point discrepancy.

Whitening here is unnormalized: the fitted residuals satisfy
``sum_n w(n) w(n)^H = I`` without a 1/(N-K) factor, so the coefficient
scale shrinks like 1/sqrt(N-K) as the sample grows. Ratios such as
``L^{-1} R_i`` are scale free.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import (
    DimensionMismatch,
    InsufficientSamples,
    NotPositiveDefinite,
    RankDeficient,
)
from .linalg import (
    _conj_transpose,
    cholesky_lower,
    gram_hermitian,
    invert_lower,
    solve_hpd,
)
from .model import (
    RvarCoefficients,
    SvarCoefficients,
    _check_usable,
    as_signal,
    build_regressor_s,
    build_regressor_t,
    validate_order,
)

#: Residuals whose Frobenius norm falls below this fraction of the signal's
#: are pure cancellation noise from an exact fit (deterministic series) and
#: are flushed to exact zero, so the whitening step sees a singular Gram
#: matrix instead of amplifying rounding garbage.
RESIDUAL_FLUSH_RTOL = 1e-12

__all__ = [
    "fit_rvar_ls",
    "rvar_to_svar",
    "fit_svar_lic",
    "fit_both",
    "FitComparison",
    "coefficient_discrepancy",
]


def fit_rvar_ls(x: ArrayLike, k: int) -> RvarCoefficients:
    """Least-squares fit of the reduced form: ``A = X S^H (S S^H)^{-1}``.

    The Gram matrix is factored and solved, never explicitly inverted.
    Returns the intercept `c`, lag matrices `A_1..A_K` and the residual
    matrix ``V = X - A S``.

    Raises
    ------
    OrderTooLarge
        If N <= K.
    InsufficientSamples
        If N - K < M*K + 1, so the Gram matrix cannot be full rank.
    RankDeficient
        If the regressors are collinear (e.g. a constant branch).
    """
    x = as_signal(x)
    k = validate_order(k)
    _check_usable(x, k)
    m, n = x.shape
    if n - k < m * k + 1:
        raise InsufficientSamples(
            f"least squares needs N - K >= M*K + 1; "
            f"got N-K={n - k} < {m * k + 1} for M={m}, K={k}")
    s = build_regressor_s(x, k)
    current = x[:, k:]
    try:
        a = solve_hpd(gram_hermitian(s), current @ _conj_transpose(s))
    except NotPositiveDefinite as exc:
        raise RankDeficient(
            f"regressor Gram matrix SS^H is singular ({exc}); "
            "the regressors are collinear") from exc
    # Contiguous layout keeps V bit-reproducible from the unpacked pieces.
    a = np.ascontiguousarray(a)
    v = current - a @ s
    if np.linalg.norm(v) <= RESIDUAL_FLUSH_RTOL * np.linalg.norm(current):
        v = np.zeros_like(v)
    lags = tuple(a[:, 1 + (i - 1) * m:1 + i * m].copy() for i in range(1, k + 1))
    return RvarCoefficients(c=a[:, 0].copy(), A=lags, V=v)


def rvar_to_svar(model: RvarCoefficients) -> SvarCoefficients:
    """Whiten a fitted reduced form into structural coefficients.

    `L` is the inverse of the lower Cholesky factor of ``V V^H`` (positive
    real diagonal), and every reduced-form coefficient is rescaled by it:
    ``R_i = L A_i``, ``t = L c``.

    Raises
    ------
    RankDeficient
        (a `NotPositiveDefinite`) if the residuals are rank deficient, e.g.
        after an exact fit of a deterministic series.
    """
    if model.V is None:
        raise ValueError("model has no residual matrix V; fit it first")
    try:
        factor = cholesky_lower(gram_hermitian(model.V))
    except NotPositiveDefinite as exc:
        raise RankDeficient(
            f"residual Gram matrix VV^H is singular ({exc}); "
            "residuals are rank deficient") from exc
    mixing = invert_lower(factor)
    return SvarCoefficients(
        L=mixing,
        R=tuple(mixing @ a for a in model.A),
        t=mixing @ model.c,
    )


def fit_svar_lic(x: ArrayLike, k: int) -> SvarCoefficients:
    """Direct fit: one large inverse Cholesky factorization of ``T T^H``.

    With ``U = (cholesky(T T^H))^{-1}`` (lower, positive real diagonal) and
    1-based index sets ``alpha = (MK+2 .. M(K+1)+1)`` over the bottom block
    and ``beta_j = ((j-1)M+2 .. jM+1)`` over lag block j of T, the
    coefficients are block reads:

    * ``L = U[alpha, alpha]``
    * ``R_i = -U[alpha, beta_{K-i+1}]`` (T stacks oldest lag first)
    * ``t = -U[alpha, 1]``

    Raises the same errors as `fit_rvar_ls`, with the stricter sample
    requirement N - K >= M*(K+1) + 1.
    """
    x = as_signal(x)
    k = validate_order(k)
    _check_usable(x, k)
    m, n = x.shape
    if n - k < m * (k + 1) + 1:
        raise InsufficientSamples(
            f"direct route needs N - K >= M*(K+1) + 1; "
            f"got N-K={n - k} < {m * (k + 1) + 1} for M={m}, K={k}")
    t_mat = build_regressor_t(x, k)
    try:
        factor = cholesky_lower(gram_hermitian(t_mat))
    except NotPositiveDefinite as exc:
        raise RankDeficient(
            f"stacked Gram matrix TT^H is singular ({exc}); "
            "the signal is deterministic or has collinear branches") from exc
    u = invert_lower(factor)
    alpha = slice(m * k + 1, m * (k + 1) + 1)
    lags = []
    for i in range(1, k + 1):
        j = k - i + 1
        lags.append(-u[alpha, (j - 1) * m + 1:j * m + 1].copy())
    return SvarCoefficients(
        L=u[alpha, alpha].copy(),
        R=tuple(lags),
        t=-u[alpha, 0].copy(),
    )


def coefficient_discrepancy(ref: SvarCoefficients, other: SvarCoefficients) -> float:
    """Max over {L, R_1..R_K, t} of ``||delta||_F / max(||ref part||_F, 1)``.

    The floor of 1 in the denominator keeps the metric meaningful when a
    coefficient (typically `t`) is near zero.
    """
    if ref.order != other.order or ref.branches != other.branches:
        raise DimensionMismatch("models differ in branch count or order")

    def rel(a: NDArray, b: NDArray) -> float:
        return float(np.linalg.norm(a - b) / max(np.linalg.norm(a), 1.0))

    errs = [rel(ref.L, other.L), rel(ref.t, other.t)]
    errs.extend(rel(a, b) for a, b in zip(ref.R, other.R))
    return max(errs)


class FitComparison(NamedTuple):
    ls: SvarCoefficients
    lic: SvarCoefficients
    discrepancy: float


def fit_both(x: ArrayLike, k: int) -> FitComparison:
    """Run both routes and report their relative Frobenius discrepancy.

    The least-squares result serves as the reference in the discrepancy
    metric. On well-conditioned inputs the discrepancy sits at rounding
    level (far below 1e-8); a large value flags ill conditioning.
    """
    x = as_signal(x)
    k = validate_order(k)
    ls = rvar_to_svar(fit_rvar_ls(x, k))
    lic = fit_svar_lic(x, k)
    return FitComparison(ls=ls, lic=lic, discrepancy=coefficient_discrepancy(ls, lic))
