"""Tests for toeplitz_core module."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import linalg as sla

from tauprec.exceptions import ConvergenceDomainError, DomainError, ShapeError
from tauprec.toeplitz_core import (
    EXP,
    IDENTITY,
    LOG1P,
    QUADRATIC,
    SIN,
    FourierSymbol,
    ToeplitzOperator,
    flip_apply,
    fourier_coeffs_fft,
    fractional_toeplitz,
    grunwald_coeffs,
    matrix_function_dense,
    second_order_weights,
    spectral_norm_estimate,
)


def test_fourier_coeffs_fft_exact_for_trigonometric_polynomial():
    """Test the FFT coefficients of a low degree trigonometric polynomial."""

    # Arrange
    n = 8

    def f(theta):
        return np.exp(1j * theta) + 2.0 + 3.0 * np.exp(-2j * theta)

    # Act
    coeffs = fourier_coeffs_fft(f, n)

    # Assert
    expected = np.zeros(2 * n - 1)
    expected[n - 1 + 1] = 1.0
    expected[n - 1] = 2.0
    expected[n - 1 - 2] = 3.0
    np.testing.assert_allclose(coeffs, expected, atol=1e-14)
    assert not np.iscomplexobj(coeffs)


def test_fourier_coeffs_fft_rejects_empty_size():
    with pytest.raises(ShapeError):
        fourier_coeffs_fft(np.cos, 0)


def test_grunwald_coeffs_recurrence():
    """Test the first weights of the order 1.5 recurrence."""

    # Act
    g = grunwald_coeffs(1.5, 3)

    # Assert
    np.testing.assert_allclose(g.values, [1.0, -1.5, 0.375, 0.0625])
    assert len(g) == 4
    assert g[1] == -1.5


def test_grunwald_coeffs_order_two_is_second_difference():
    g = grunwald_coeffs(2.0, 5).values
    np.testing.assert_allclose(g, [1.0, -2.0, 1.0, 0.0, 0.0, 0.0], atol=1e-15)


@pytest.mark.parametrize("alpha", [1.0, 0.5, 2.5])
def test_grunwald_coeffs_rejects_order_outside_range(alpha):
    with pytest.raises(DomainError):
        grunwald_coeffs(alpha, 10)


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_grunwald_coeffs_invariants(alpha):
    """Test signs, monotonicity and the absolute sum of the weights."""

    # Act
    g = grunwald_coeffs(alpha, 10_000).values

    # Assert
    assert g[0] == 1.0
    assert np.all(g[2:] > 0)
    assert np.all(np.diff(g[2:]) <= 0)
    assert np.all(np.cumsum(g)[1:] < 0)
    assert abs(np.abs(g).sum() - 2.0 * alpha) < 1e-2


def test_second_order_weights():
    alpha = 1.6
    g = grunwald_coeffs(alpha, 4).values
    w = second_order_weights(alpha, 4).values
    assert w[0] == pytest.approx(alpha / 2)
    assert w[1] == pytest.approx(alpha / 2 * g[1] + (2 - alpha) / 2 * g[0])
    assert w[3] == pytest.approx(alpha / 2 * g[3] + (2 - alpha) / 2 * g[2])


@given(n=st.integers(min_value=1, max_value=40), seed=st.integers(min_value=0, max_value=10_000))
def test_toeplitz_matvec_matches_dense(n, seed):
    """Test the FFT matvec against the dense matrix."""

    # Arrange
    rng = np.random.default_rng(seed)
    T = ToeplitzOperator(rng.standard_normal(2 * n - 1), n)
    x = rng.standard_normal(n)

    # Act
    y = T.matvec(x)

    # Assert
    np.testing.assert_allclose(y, T.todense() @ x, atol=1e-10 * max(1.0, np.abs(T.todense() @ x).max()))


def test_toeplitz_layout_and_transpose():
    T = ToeplitzOperator(np.arange(-2.0, 3.0), 3)
    dense = T.todense()
    assert dense[0, 0] == 0.0
    assert dense[1, 0] == 1.0
    assert dense[0, 1] == -1.0
    assert dense[2, 0] == 2.0
    np.testing.assert_array_equal(T.T.todense(), dense.T)
    assert T.coefficient(-2) == -2.0


def test_toeplitz_matvec_along_axis(rng):
    T = ToeplitzOperator(rng.standard_normal(9), 5)
    X = rng.standard_normal((3, 5))
    np.testing.assert_allclose(T.matvec(X, axis=1), X @ T.todense().T, atol=1e-12)
    np.testing.assert_allclose(T @ X.T, T.todense() @ X.T, atol=1e-12)


def test_toeplitz_rejects_wrong_coefficient_count():
    with pytest.raises(ShapeError):
        ToeplitzOperator(np.ones(4), 3)


def test_toeplitz_as_linear_operator(rng):
    T = ToeplitzOperator(rng.standard_normal(11), 6)
    x = rng.standard_normal(6)
    op = T.as_linear_operator()
    np.testing.assert_allclose(op.matvec(x), T.todense() @ x, atol=1e-12)
    np.testing.assert_allclose(op.rmatvec(x), T.todense().T @ x, atol=1e-12)


def test_fractional_toeplitz_structure():
    """Test the shifted Grünwald layout."""

    # Arrange
    alpha, n = 1.5, 6
    g = grunwald_coeffs(alpha, n).values

    # Act
    dense = fractional_toeplitz(alpha, n).todense()

    # Assert
    assert dense[0, 1] == pytest.approx(-1.0)
    np.testing.assert_allclose(np.diag(dense), -g[1])
    assert dense[3, 0] == pytest.approx(-g[4])
    assert np.all(np.triu(dense, 2) == 0)


def test_fractional_toeplitz_size_one():
    np.testing.assert_allclose(fractional_toeplitz(1.7, 1).todense(), [[1.7]])


def test_fractional_toeplitz_unknown_scheme():
    with pytest.raises(DomainError):
        fractional_toeplitz(1.5, 4, scheme="third")


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=30))
def test_flip_is_involution(values):
    x = np.array(values)
    np.testing.assert_array_equal(flip_apply(flip_apply(x)), x)


def test_non_periodic_symbol_refuses_points_outside_domain():
    s = FourierSymbol(func=np.sin, domain=(0.0, 1.0), periodic=False, real=True)
    assert s(np.array([0.5])).shape == (1,)
    with pytest.raises(DomainError):
        s(np.array([2.0]))


def test_matrix_function_polynomial(rng):
    A = rng.standard_normal((20, 20))
    np.testing.assert_allclose(matrix_function_dense(QUADRATIC, A), A @ A + A + np.eye(20), atol=1e-10)


def test_matrix_function_identity_exp_sin(rng):
    A = rng.standard_normal((10, 10)) / 4
    np.testing.assert_array_equal(matrix_function_dense(IDENTITY, A), A)
    np.testing.assert_allclose(matrix_function_dense(EXP, A), sla.expm(A), atol=1e-12)
    np.testing.assert_allclose(matrix_function_dense(SIN, A), sla.sinm(A), atol=1e-12)


def test_matrix_function_series_inside_disc(rng):
    """Test the Taylor series of log(1+z) against the matrix logarithm."""

    # Arrange
    B = rng.standard_normal((12, 12))
    A = 0.3 * (B + B.T) / np.linalg.norm(B + B.T, 2)

    # Act
    result = matrix_function_dense(LOG1P, A)

    # Assert
    np.testing.assert_allclose(result, np.real(sla.logm(np.eye(12) + A)), atol=1e-10)


def test_matrix_function_series_outside_disc():
    with pytest.raises(ConvergenceDomainError):
        matrix_function_dense(LOG1P, 2.0 * np.eye(4))


def test_matrix_function_rejects_non_square():
    with pytest.raises(ShapeError):
        matrix_function_dense(EXP, np.ones((2, 3)))


def test_spectral_norm_estimate(rng):
    A = rng.standard_normal((30, 30))
    estimate = spectral_norm_estimate(A)
    assert estimate <= np.linalg.norm(A, 2) * (1 + 1e-12)
    assert estimate == pytest.approx(np.linalg.norm(A, 2), rel=5e-2)
    assert spectral_norm_estimate(np.zeros((3, 3))) == 0.0
