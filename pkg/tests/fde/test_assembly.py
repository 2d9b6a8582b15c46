"""Tests for assembly module."""
import numpy as np
import pytest

from tauprec.exceptions import ShapeError
from tauprec.fde.assembly import (
    assemble_1d,
    assemble_2d,
    cn_rhs_2d,
    dense_spatial_operators_2d,
    spatial_operators_2d,
    step_rhs_1d,
)
from tauprec.fde.problems import constant_problem_1d, example_1d, example_2d
from tauprec.toeplitz_core import fractional_toeplitz


def test_assemble_1d_matches_dense_definition(rng):
    """Test ν I + D₊T + D₋Tᵀ against the matrix-free action."""

    # Arrange
    problem = example_1d(1.6, 20)
    T = fractional_toeplitz(1.6, 20).todense()
    plus, minus = problem.coefficients(problem.time(2))
    expected = problem.nu * np.eye(20) + plus[:, None] * T + minus[:, None] * T.T
    x = rng.standard_normal(20)

    # Act
    M = assemble_1d(problem, 2)

    # Assert
    np.testing.assert_allclose(M.todense(), expected, atol=1e-12)
    np.testing.assert_allclose(M(x), expected @ x, atol=1e-10)
    for k in (-2, -1, 0, 1, 2):
        np.testing.assert_allclose(M.diagonal(k), np.diagonal(expected, k), atol=1e-12)
    assert not M.symmetric


def test_assemble_1d_constant_coefficients_is_symmetric():
    M = assemble_1d(constant_problem_1d(1.5, 16, d=2.0), 1)
    dense = M.todense()
    assert M.symmetric
    np.testing.assert_allclose(dense, dense.T, atol=1e-14)
    assert np.all(np.linalg.eigvalsh(dense) > 0)


def test_step_rhs_1d():
    problem = example_1d(1.5, 15)
    u = np.ones(15)
    expected = problem.nu * u + problem.h**1.5 * problem.source(problem.nodes, problem.time(1))
    np.testing.assert_allclose(step_rhs_1d(problem, 1, u), expected)
    with pytest.raises(ShapeError):
        step_rhs_1d(problem, 1, np.ones(14))


def test_spatial_operators_2d_match_dense(rng):
    problem = example_2d(1.7, 1.3, 5)
    apply_x, apply_y = spatial_operators_2d(problem, 0.2)
    Ax, Ay = dense_spatial_operators_2d(problem, 0.2)
    u = rng.standard_normal(problem.N)
    np.testing.assert_allclose(apply_x(u), Ax @ u, atol=1e-10)
    np.testing.assert_allclose(apply_y(u), Ay @ u, atol=1e-10)


def test_assemble_2d_and_rhs(rng):
    """Test the Crank–Nicolson system and right-hand side in dense form."""

    # Arrange
    problem = example_2d(1.8, 1.6, 4)
    u = rng.standard_normal(problem.N)
    Ax0, Ay0 = dense_spatial_operators_2d(problem, problem.time(0))
    ratio = problem.s / problem.r
    X, Y = problem.mesh
    forcing = problem.source(X, Y, problem.time(0.5)).ravel()

    # Act
    A = assemble_2d(problem, 1)
    b = cn_rhs_2d(problem, 1, u)

    # Assert
    Ax1, Ay1 = dense_spatial_operators_2d(problem, problem.time(1))
    expected_A = np.eye(problem.N) / problem.r + Ax1 + ratio * Ay1
    np.testing.assert_allclose(A.todense(), expected_A, atol=1e-12)
    np.testing.assert_allclose(A(u), expected_A @ u, atol=1e-10)
    expected_b = u / problem.r - Ax0 @ u - ratio * (Ay0 @ u) + 2 * problem.hx**1.8 * forcing
    np.testing.assert_allclose(b, expected_b, atol=1e-10)
