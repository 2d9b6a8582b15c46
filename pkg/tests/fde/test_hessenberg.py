"""Tests for hessenberg module."""
import numpy as np
import pytest

from tauprec.exceptions import DomainError, ShapeError
from tauprec.fde.hessenberg import hessenberg_direct_solve, inverse_order_toeplitz
from tauprec.toeplitz_core import binomial_series, fractional_toeplitz


@pytest.mark.parametrize("alpha,n", [(1.5, 64), (1.2, 17), (1.9, 40), (2.0, 10)])
def test_hessenberg_matches_dense_solve(rng, alpha, n):
    """Test the direct solve of -T x = b against LAPACK."""

    # Arrange
    b = rng.standard_normal(n)
    dense = -fractional_toeplitz(alpha, n).todense()

    # Act
    x = hessenberg_direct_solve(alpha, b)

    # Assert
    expected = np.linalg.solve(dense, b)
    assert np.linalg.norm(x - expected) <= 1e-8 * np.linalg.norm(expected)


def test_hessenberg_size_one():
    np.testing.assert_allclose(hessenberg_direct_solve(1.5, [3.0]), [-2.0])


def test_hessenberg_rejects_empty_and_bad_order():
    with pytest.raises(ShapeError):
        hessenberg_direct_solve(1.5, [])
    with pytest.raises(DomainError):
        hessenberg_direct_solve(0.5, [1.0, 2.0])


def test_inverse_order_toeplitz_is_lower_triangular():
    L = inverse_order_toeplitz(1.5, 6).todense()
    np.testing.assert_array_equal(np.triu(L, 1), 0)
    np.testing.assert_allclose(L[:, 0], binomial_series(-1.5, 5))
