"""Tests for catalog module."""
import numpy as np
import pytest
from scipy import linalg as sla

from tauprec.exceptions import DomainError
from tauprec.spectra.catalog import (
    ALIASES,
    EXAMPLES,
    FINANCE_PARAMS,
    circulant_preconditioners,
    finance_coefficients,
    get_example,
    matrix_function,
    symmetrized_matrix,
)


@pytest.mark.parametrize("alias,name", sorted(ALIASES.items()))
def test_get_example_aliases(alias, name):
    assert get_example(alias) is EXAMPLES[name]
    assert get_example(name).name == name


def test_get_example_unknown():
    with pytest.raises(DomainError, match="unknown spectrum example"):
        get_example("cosh")


def test_sin_example_matrix():
    """Test h(T_n(f)) for f = e^{iθ} and h = sin against the matrix sine."""

    # Arrange
    example = get_example("sin")
    T = example.toeplitz(12).todense()

    # Act
    H = matrix_function(example, 12)

    # Assert
    np.testing.assert_allclose(T, np.eye(12, k=-1), atol=1e-14)
    np.testing.assert_allclose(H, sla.sinm(T), atol=1e-12)


def test_poly_example_matrix():
    example = get_example("poly")
    T = example.toeplitz(10).todense()
    np.testing.assert_allclose(matrix_function(example, 10), T @ T + T + np.eye(10), atol=1e-10)


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_symmetrized_matrix_is_symmetric(name):
    Y = symmetrized_matrix(get_example(name), 16)
    assert Y.shape == (16, 16)
    assert not np.iscomplexobj(Y)
    np.testing.assert_allclose(Y, Y.T, atol=1e-14)


def test_symmetrized_matrix_is_flip_times_h():
    """Test the flip of a persymmetric h(T) is already symmetric."""

    # Arrange
    example = get_example("log")

    # Act
    H = matrix_function(example, 10)

    # Assert
    np.testing.assert_allclose(symmetrized_matrix(example, 10), H[::-1, :], atol=1e-12)


def test_finance_coefficients():
    coeffs = finance_coefficients(**FINANCE_PARAMS)
    n = FINANCE_PARAMS["n"]
    assert sorted(coeffs) == list(range(-(n - 1), n))
    assert coeffs[0] < 0
    assert coeffs[1] > 0 and coeffs[-1] > 0
    assert all(coeffs[j] >= 0 for j in coeffs if abs(j) >= 2)


def test_symbols_of_an_example():
    example = get_example("sin")
    theta = np.linspace(0.1, 3.0, 5)
    np.testing.assert_allclose(example.svd_symbol(theta), np.abs(np.sin(np.exp(1j * theta))), atol=1e-12)
    assert not example.eig_symbol.periodic


def test_circulant_preconditioners():
    example = get_example("sin")
    preconditioners = circulant_preconditioners(example, 16)
    assert set(preconditioners) == {"|c(T(h∘f))|", "|h(c(T(f)))|"}
    for C in preconditioners.values():
        assert C.n == 16
        assert np.all(np.real(C.eigenvalues) >= 0)
