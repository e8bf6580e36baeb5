"""Kernel tests: Gram products, Cholesky, triangular inversion, HPD solves.

Hand-checkable oracles are frozen as literals; the property tests draw
random well-conditioned inputs in both scalar fields.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svarlic.exceptions import DimensionMismatch, NotPositiveDefinite
from svarlic.linalg import (
    as_matrix,
    cholesky_lower,
    gram_hermitian,
    invert_lower,
    solve_hpd,
)

FIELDS = ["real", "complex"]


def random_matrix(rng, rows, cols, field):
    a = rng.standard_normal((rows, cols))
    if field == "complex":
        a = a + 1j * rng.standard_normal((rows, cols))
    return a


def random_hpd(rng, dim, field):
    g = random_matrix(rng, dim, dim, field)
    return gram_hermitian(g) + 1e-6 * np.eye(dim)


def random_lower(rng, dim, field):
    c = np.tril(random_matrix(rng, dim, dim, field), -1) * 0.5
    c = c.astype(np.complex128 if field == "complex" else np.float64)
    np.fill_diagonal(c, rng.uniform(0.5, 2.0, size=dim))
    return c


class TestAsMatrix:
    def test_int_input_becomes_float(self):
        out = as_matrix([[1, 2], [3, 4]])
        assert out.dtype == np.float64

    def test_complex_preserved(self):
        out = as_matrix([[1j, 0]])
        assert out.dtype == np.complex128

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="non-finite"):
            as_matrix([[np.nan, 0.0]])

    def test_rejects_inf(self):
        with pytest.raises(ValueError, match="non-finite"):
            as_matrix([[np.inf, 0.0]])

    def test_rejects_wrong_ndim(self):
        with pytest.raises(ValueError, match="2-D"):
            as_matrix(np.zeros((2, 2, 2)))

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="nonzero"):
            as_matrix(np.zeros((0, 3)))

    def test_rejects_non_numeric(self):
        with pytest.raises(ValueError, match="numeric"):
            as_matrix(np.array([["a", "b"]]))


class TestGramHermitian:
    def test_identity(self):
        assert np.array_equal(gram_hermitian(np.eye(2)), np.eye(2))

    def test_hand_oracle(self):
        g = gram_hermitian([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(g, [[5.0, 11.0], [11.0, 25.0]])

    def test_complex_unit_row(self):
        g = gram_hermitian([[1j, 0.0]])
        assert g.shape == (1, 1)
        assert g[0, 0] == 1.0

    @pytest.mark.parametrize("field", FIELDS)
    def test_exactly_hermitian(self, field):
        rng = np.random.default_rng(42)
        for rows, cols in [(1, 1), (3, 5), (5, 3), (7, 7)]:
            g = gram_hermitian(random_matrix(rng, rows, cols, field))
            assert np.array_equal(g, g.conj().T)
            assert np.all(g.diagonal().imag == 0) if field == "complex" else True

    def test_matches_direct_product(self):
        rng = np.random.default_rng(7)
        a = random_matrix(rng, 4, 9, "complex")
        np.testing.assert_allclose(gram_hermitian(a), a @ a.conj().T,
                                   rtol=0, atol=1e-13)


class TestCholeskyLower:
    def test_identity(self):
        assert np.array_equal(cholesky_lower(np.eye(3)), np.eye(3))

    def test_hand_oracle(self):
        c = cholesky_lower([[4.0, 2.0], [2.0, 5.0]])
        assert np.array_equal(c, [[2.0, 0.0], [1.0, 2.0]])

    def test_hand_oracle_3x3(self):
        c = cholesky_lower([[4.0, 2.0, 2.0], [2.0, 5.0, 3.0], [2.0, 3.0, 6.0]])
        assert np.array_equal(c, [[2, 0, 0], [1, 2, 0], [1, 1, 2]])

    def test_complex_hand_oracle(self):
        c = cholesky_lower([[4.0, 2.0 - 2.0j], [2.0 + 2.0j, 6.0]])
        assert np.array_equal(c, [[2.0, 0.0], [1.0 + 1.0j, 2.0]])

    def test_indefinite_raises(self):
        with pytest.raises(NotPositiveDefinite):
            cholesky_lower([[1.0, 2.0], [2.0, 1.0]])

    def test_singular_raises(self):
        with pytest.raises(NotPositiveDefinite):
            cholesky_lower([[1.0, 1.0], [1.0, 1.0]])

    def test_non_hermitian_raises(self):
        with pytest.raises(ValueError, match="Hermitian"):
            cholesky_lower([[1.0, 0.5], [0.0, 1.0]])

    def test_non_square_raises(self):
        with pytest.raises(ValueError, match="square"):
            cholesky_lower(np.ones((2, 3)))

    def test_deterministic_bit_identical(self):
        rng = np.random.default_rng(11)
        h = random_hpd(rng, 6, "real")
        first = cholesky_lower(h)
        second = cholesky_lower(h.copy())
        assert first.tobytes() == second.tobytes()

    @pytest.mark.parametrize("field", FIELDS)
    def test_factor_shape_contract(self, field):
        rng = np.random.default_rng(5)
        c = cholesky_lower(random_hpd(rng, 5, field))
        assert np.all(np.triu(c, 1) == 0)
        assert np.all(c.diagonal().real > 0)
        if field == "complex":
            assert np.all(c.diagonal().imag == 0)

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(dim=st.integers(1, 20), seed=st.integers(0, 2**31),
           field=st.sampled_from(FIELDS))
    def test_reconstruction_property(self, dim, seed, field):
        rng = np.random.default_rng(seed)
        h = random_hpd(rng, dim, field)
        c = cholesky_lower(h)
        err = np.linalg.norm(c @ c.conj().T - h)
        assert err <= 1e-10 * np.linalg.norm(h)


class TestInvertLower:
    def test_identity(self):
        assert np.array_equal(invert_lower(np.eye(4)), np.eye(4))

    def test_hand_oracle(self):
        u = invert_lower([[2.0, 0.0], [1.0, 2.0]])
        assert np.array_equal(u, [[0.5, 0.0], [-0.25, 0.5]])

    def test_diagonal(self):
        u = invert_lower(np.diag([2.0, 4.0]))
        assert np.array_equal(u, np.diag([0.5, 0.25]))

    def test_rejects_upper_entries(self):
        with pytest.raises(ValueError, match="above the diagonal"):
            invert_lower([[1.0, 0.5], [0.0, 1.0]])

    def test_rejects_nonpositive_diagonal(self):
        with pytest.raises(ValueError, match="strictly positive"):
            invert_lower([[1.0, 0.0], [1.0, -2.0]])

    def test_rejects_complex_diagonal(self):
        with pytest.raises(ValueError, match="real"):
            invert_lower(np.array([[1.0 + 1.0j, 0.0], [0.0, 1.0]]))

    def test_upper_triangle_exactly_zero(self):
        rng = np.random.default_rng(3)
        u = invert_lower(random_lower(rng, 7, "complex"))
        strict_upper = u[np.triu_indices(7, 1)]
        assert np.all(strict_upper == 0)
        # +0 exactly, not -0: structural zeros never carry a sign
        assert not np.any(np.signbit(strict_upper.real))

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(dim=st.integers(1, 20), seed=st.integers(0, 2**31),
           field=st.sampled_from(FIELDS))
    def test_inverse_consistency_property(self, dim, seed, field):
        rng = np.random.default_rng(seed)
        c = random_lower(rng, dim, field)
        u = invert_lower(c)
        assert np.abs(u @ c - np.eye(dim)).max() <= 1e-10
        assert np.all(u.diagonal().real > 0)


class TestSolveHpd:
    def test_identity_system(self):
        y = solve_hpd(np.eye(2), [[7.0, 8.0]])
        assert np.array_equal(y, [[7.0, 8.0]])

    def test_diagonal_scaling(self):
        y = solve_hpd(np.diag([2.0, 4.0]), [[2.0, 4.0]])
        np.testing.assert_allclose(y, [[1.0, 1.0]], rtol=0, atol=1e-15)

    def test_hand_oracle(self):
        y = solve_hpd([[4.0, 2.0], [2.0, 5.0]], [[4.0, 2.0]])
        np.testing.assert_allclose(y, [[1.0, 0.0]], rtol=0, atol=1e-15)

    @pytest.mark.parametrize("field", FIELDS)
    def test_residual_property(self, field):
        rng = np.random.default_rng(19)
        for dim, rows in [(1, 1), (4, 2), (9, 5)]:
            h = random_hpd(rng, dim, field)
            b = random_matrix(rng, rows, dim, field)
            y = solve_hpd(h, b)
            assert np.linalg.norm(y @ h - b) < 1e-10 * np.linalg.norm(b)

    def test_propagates_not_positive_definite(self):
        with pytest.raises(NotPositiveDefinite):
            solve_hpd([[1.0, 2.0], [2.0, 1.0]], [[1.0, 1.0]])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_hpd(np.eye(3), np.ones((2, 2)))
