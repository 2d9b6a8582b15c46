"""Tests for pde module."""
import numpy as np
import pytest

from tauprec.amput.model import Boundary, PutGrid, PutParams, european_put
from tauprec.amput.pde import bs_solve_above_boundary, first_continuation_node, implicit_euler_rows
from tauprec.exceptions import ShapeError


@pytest.fixture
def params():
    return PutParams()


def test_first_continuation_node():
    x = np.arange(6.0)
    assert first_continuation_node(x, 2.0) == 3
    assert first_continuation_node(x, 2.5) == 3
    assert first_continuation_node(x, 0.0) == 1


def test_implicit_euler_rows_conserve_constants(params):
    """Test a constant state only decays by the discount rate."""

    # Arrange
    x = np.linspace(10.0, 50.0, 5)

    # Act
    sub, diag, sup = implicit_euler_rows(x, params, dx=10.0, dt=0.01)

    # Assert
    np.testing.assert_allclose(sub + diag + sup, 1.0 + 0.01 * params.rate)


def test_never_exercise_gives_european_price(params):
    """Test the policy that never exercises reproduces Black–Scholes."""

    # Arrange
    grid = PutGrid.build(params, dx=1.0, dt=0.005)
    boundary = Boundary.never(params, grid)

    # Act
    surface = bs_solve_above_boundary(params, boundary, grid, terminal=params.payoff(grid.nodes))

    # Assert
    x = np.array([80.0, 100.0, 120.0])
    computed = surface.value_at(x, params.horizon)
    np.testing.assert_allclose(computed, european_put(params, x, params.horizon), atol=0.05)
    assert not np.isnan(surface.values).any()


def test_constant_boundary_surface(params):
    """Test the stopping region is NaN and the boundary node carries K - b."""

    # Arrange
    grid = PutGrid.build(params, dx=2.0, dt=0.02)
    boundary = Boundary.constant(params, grid, 80.0)

    # Act
    surface = bs_solve_above_boundary(params, boundary, grid)

    # Assert
    x = grid.nodes
    row = surface.values[-1]
    assert np.isnan(row[x < 80.0]).all()
    assert row[x == 80.0][0] == pytest.approx(20.0)
    assert np.all(row[x > 80.0] >= 0.0)
    assert np.all(row[x > 80.0] <= 20.0 + 1e-12)
    replication = surface.replication()
    np.testing.assert_allclose(replication[-1, x < 80.0], params.payoff(x[x < 80.0]))


def test_solve_rejects_mismatched_inputs(params):
    grid = PutGrid.build(params, dx=2.0, dt=0.02)
    other = PutGrid.build(params, dx=2.0, dt=0.05)
    with pytest.raises(ShapeError):
        bs_solve_above_boundary(params, Boundary.never(params, other), grid)
    with pytest.raises(ShapeError):
        bs_solve_above_boundary(params, Boundary.never(params, grid), grid, terminal=np.zeros(3))
