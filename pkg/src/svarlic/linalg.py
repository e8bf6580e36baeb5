"""Dense linear algebra kernel: Hermitian Gram products, lower Cholesky
factorization, lower-triangular inversion, and Hermitian positive-definite
solves.

All routines work on plain 2-D numpy arrays in double precision, real or
complex. Conjugate transpose is written ``H`` throughout; for real matrices
it degenerates to the plain transpose. Cholesky factors follow one fixed
convention: lower triangular with a strictly positive real diagonal, which
makes the factor unique and lets two estimation routes be compared exactly
rather than up to sign.

Both estimation pipelines in :mod:`svarlic.estimators` run through this one
kernel, so cross-method tests isolate method differences, not kernel
differences.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import DimensionMismatch, NotPositiveDefinite

#: Relative tolerance for the Hermitian-symmetry check in `cholesky_lower`.
HERMITIAN_RTOL = 1e-10

#: A Cholesky pivot below PIVOT_RTOL times the largest diagonal entry of the
#: input is treated as zero and raises `NotPositiveDefinite`.
PIVOT_RTOL = 1e-12

__all__ = [
    "HERMITIAN_RTOL",
    "PIVOT_RTOL",
    "as_matrix",
    "gram_hermitian",
    "cholesky_lower",
    "invert_lower",
    "solve_hpd",
]


def as_matrix(a: ArrayLike, name: str = "matrix") -> NDArray:
    """Coerce `a` to a 2-D float64 or complex128 array with finite entries."""
    arr = np.asarray(a)
    if arr.dtype.kind in "iub":
        arr = arr.astype(np.float64)
    elif arr.dtype.kind == "f":
        arr = arr.astype(np.float64, copy=False)
    elif arr.dtype.kind == "c":
        arr = arr.astype(np.complex128, copy=False)
    else:
        raise ValueError(f"{name} must be numeric, got dtype {arr.dtype}")
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must have nonzero dimensions, got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _conj_transpose(a: NDArray) -> NDArray:
    return a.conj().T if np.iscomplexobj(a) else a.T


def gram_hermitian(a: ArrayLike) -> NDArray:
    """Return the Gram matrix ``a @ a^H`` of shape (rows, rows).

    The result is Hermitian exactly, entry for entry: the upper triangle is
    the conjugate mirror of the computed lower triangle and the diagonal is
    forced real.
    """
    a = as_matrix(a)
    g = a @ _conj_transpose(a)
    lower = np.tril(g)
    g = lower + _conj_transpose(np.tril(g, -1))
    if np.iscomplexobj(g):
        np.fill_diagonal(g, g.diagonal().real)
    return g


def cholesky_lower(h: ArrayLike) -> NDArray:
    """Factor a Hermitian positive-definite `h` as ``C @ C^H``.

    Returns the unique lower-triangular factor `C` with strictly positive
    real diagonal. Only the lower triangle of `h` is read once the
    symmetry check passes.

    Raises
    ------
    NotPositiveDefinite
        If a pivot falls at or below ``PIVOT_RTOL * max(diag(h))``, which
        signals a rank-deficient or indefinite input.
    ValueError
        If `h` is not square or departs from Hermitian symmetry by more
        than ``HERMITIAN_RTOL`` relative to its largest entry.
    """
    h = as_matrix(h, "h")
    n = h.shape[0]
    if h.shape[1] != n:
        raise ValueError(f"h must be square, got shape {h.shape}")
    scale = np.abs(h).max()
    if scale > 0 and np.abs(h - _conj_transpose(h)).max() > HERMITIAN_RTOL * scale:
        raise ValueError("h is not Hermitian within tolerance")

    diag = h.diagonal().real
    threshold = PIVOT_RTOL * max(float(diag.max()), 0.0)
    c = np.zeros_like(h)
    for j in range(n):
        pivot = float(diag[j] - (c[j, :j] @ c[j, :j].conj()).real)
        if pivot <= threshold:
            raise NotPositiveDefinite(
                f"pivot {pivot:.3e} at index {j} is below threshold "
                f"{threshold:.3e}; matrix is not positive definite"
            )
        cjj = math.sqrt(pivot)
        c[j, j] = cjj
        if j + 1 < n:
            c[j + 1:, j] = (h[j + 1:, j] - c[j + 1:, :j] @ c[j, :j].conj()) / cjj
    return c


def _check_lower_factor(c: NDArray) -> NDArray:
    c = as_matrix(c, "c")
    n = c.shape[0]
    if c.shape[1] != n:
        raise ValueError(f"factor must be square, got shape {c.shape}")
    if np.any(np.triu(c, 1) != 0):
        raise ValueError("factor has nonzero entries above the diagonal")
    d = c.diagonal()
    if np.iscomplexobj(c) and np.any(d.imag != 0):
        raise ValueError("factor diagonal must be real")
    if np.any(d.real <= 0):
        raise ValueError("factor diagonal must be strictly positive")
    return c


def invert_lower(c: ArrayLike) -> NDArray:
    """Invert a lower-triangular factor with positive real diagonal.

    The inverse is again lower triangular with positive real diagonal and
    exact zeros above the diagonal.
    """
    c = _check_lower_factor(c)
    n = c.shape[0]
    u = np.zeros_like(c)
    for i in range(n):
        # Row i of the forward solve C @ U = I; columns past i stay exactly +0.
        u[i, :i] = -(c[i, :i] @ u[:i, :i]) / c[i, i]
        u[i, i] = 1.0 / c[i, i]
    return u


def _solve_lower(c: NDArray, b: NDArray) -> NDArray:
    """Solve ``c @ z = b`` for lower-triangular `c` by forward substitution."""
    n = c.shape[0]
    z = np.zeros((n, b.shape[1]), dtype=np.promote_types(c.dtype, b.dtype))
    for i in range(n):
        z[i, :] = (b[i, :] - c[i, :i] @ z[:i, :]) / c[i, i]
    return z


def _solve_lower_conj_t(c: NDArray, b: NDArray) -> NDArray:
    """Solve ``c^H @ z = b`` for lower-triangular `c` by back substitution."""
    n = c.shape[0]
    z = np.zeros((n, b.shape[1]), dtype=np.promote_types(c.dtype, b.dtype))
    for i in range(n - 1, -1, -1):
        z[i, :] = (b[i, :] - c[i + 1:, i].conj() @ z[i + 1:, :]) / c[i, i].conj()
    return z


def solve_hpd(h: ArrayLike, b: ArrayLike) -> NDArray:
    """Solve ``y @ h = b`` (right division) for Hermitian positive-definite `h`.

    Factors `h` once and substitutes through the triangular factors instead
    of forming an explicit inverse. `b` must have ``h.shape[0]`` columns.

    Raises
    ------
    NotPositiveDefinite
        Propagated from the factorization.
    """
    b = as_matrix(b, "b")
    c = cholesky_lower(h)
    if b.shape[1] != c.shape[0]:
        raise DimensionMismatch(
            f"b has {b.shape[1]} columns but h is {c.shape[0]}x{c.shape[0]}"
        )
    # y @ h = b  <=>  h @ y^H = b^H  <=>  C (C^H y^H) = b^H
    g = _solve_lower(c, _conj_transpose(b))
    yh = _solve_lower_conj_t(c, g)
    return _conj_transpose(yh)
