"""Tests for model module."""
import numpy as np
import pytest
from scipy.stats import norm

from tauprec.amput.model import (
    Boundary,
    PutGrid,
    PutParams,
    ValueSurface,
    european_put,
    perpetual_put_boundary,
)
from tauprec.exceptions import DomainError, ShapeError


@pytest.fixture
def params():
    return PutParams()


@pytest.mark.parametrize("field", ["rate", "volatility", "strike", "horizon"])
def test_params_must_be_positive(field):
    with pytest.raises(DomainError, match=field):
        PutParams(**{field: 0.0})


def test_payoff(params):
    np.testing.assert_allclose(params.payoff([0.0, 50.0, 100.0, 150.0]), [100.0, 50.0, 0.0, 0.0])


def test_grid_build(params):
    """Test the default time step dx² and the 3K truncation."""

    # Act
    grid = PutGrid.build(params, dx=0.5)
    coarse = PutGrid.build(params, dx=2.0, dt=0.02)

    # Assert
    assert grid.dt == pytest.approx(0.25)
    assert grid.steps == 4
    assert grid.x_max == pytest.approx(300.0)
    assert grid.size == 601
    assert coarse.steps == 50
    assert coarse.nodes[-1] == pytest.approx(300.0)
    np.testing.assert_allclose(coarse.taus[[0, -1]], [0.0, 1.0])


def test_grid_rejects_bad_values(params):
    with pytest.raises(DomainError):
        PutGrid.build(params, dx=1.0, x_max_factor=2.0)
    with pytest.raises(DomainError):
        PutGrid(dx=1.0, dt=0.1, x_max=2.0, steps=1)
    with pytest.raises(DomainError):
        PutGrid(dx=0.0, dt=0.1, x_max=2.0, steps=1)


def test_boundary_constant_and_interpolation(params):
    grid = PutGrid.build(params, dx=2.0, dt=0.25)
    boundary = Boundary.constant(params, grid, 80.0)
    assert boundary.values[0] == 100.0
    np.testing.assert_allclose(boundary.values[1:], 80.0)
    assert boundary.at(0.125) == pytest.approx(90.0)
    assert boundary.distance(Boundary.never(params, grid)) == pytest.approx(100.0)


def test_boundary_validation():
    with pytest.raises(ShapeError):
        Boundary(np.array([0.0, 1.0]), np.array([1.0]), 100.0)
    with pytest.raises(DomainError):
        Boundary(np.array([0.0, 1.0]), np.array([100.0, 120.0]), 100.0)
    with pytest.raises(DomainError):
        Boundary(np.array([0.0, 1.0]), np.array([100.0, -1.0]), 100.0)


def test_value_surface_replication_and_interpolation(params):
    """Test NaN cells are replaced by the payoff and values are interpolated."""

    # Arrange
    grid = PutGrid(dx=50.0, dt=0.5, x_max=300.0, steps=2)
    values = np.tile(np.linspace(20.0, 0.0, grid.size), (3, 1))
    values[:, 0] = np.nan
    surface = ValueSurface(params, grid, Boundary.never(params, grid), values)

    # Act
    replication = surface.replication()

    # Assert
    np.testing.assert_allclose(replication[:, 0], 100.0)
    np.testing.assert_allclose(replication[:, 1:], values[:, 1:])
    assert float(surface.value_at(75.0, 0.25)) == pytest.approx(0.5 * (replication[0, 1] + replication[0, 2]))
    assert surface.boundary_at(0.5) == 0.0


def test_european_put(params):
    assert float(european_put(params, 100.0, 1.0)) == pytest.approx(7.218, abs=0.03)
    assert float(european_put(params, 80.0, 0.0)) == pytest.approx(20.0)
    assert float(european_put(params, 0.0, 1.0)) == pytest.approx(100.0 * np.exp(-0.1))


def test_european_put_call_parity(params):
    """Test the put against a call priced from the same d1, d2."""
    x, tau = np.array([80.0, 100.0, 130.0]), 0.7
    vol = params.volatility * np.sqrt(tau)
    d1 = (np.log(x / params.strike) + (params.rate + 0.5 * params.volatility**2) * tau) / vol
    call = x * norm.cdf(d1) - params.strike * np.exp(-params.rate * tau) * norm.cdf(d1 - vol)
    put = european_put(params, x, tau)
    np.testing.assert_allclose(call - put, x - params.strike * np.exp(-params.rate * tau), atol=1e-10)


def test_perpetual_put_boundary(params):
    assert perpetual_put_boundary(params) == pytest.approx(68.9655, abs=1e-4)
