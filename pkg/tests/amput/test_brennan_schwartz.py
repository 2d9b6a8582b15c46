"""Tests for brennan_schwartz module."""
import numpy as np
import pytest

from tauprec.amput.brennan_schwartz import brennan_schwartz
from tauprec.amput.model import PutGrid, PutParams
from tauprec.amput.pia import pia
from tauprec.bench.reference import PUT_BOUNDARY_BS, PUT_TAUS


@pytest.fixture(scope="module")
def coarse():
    params = PutParams()
    grid = PutGrid.build(params, dx=1.0, dt=0.02)
    return params, grid, brennan_schwartz(params, grid)


def test_projected_values_dominate_payoff(coarse):
    params, grid, result = coarse
    payoff = params.payoff(grid.nodes)
    assert np.all(result.values >= payoff[None, :] - 1e-12)
    np.testing.assert_allclose(result.values[0], payoff)


def test_unadjusted_boundary_lies_on_grid_nodes(coarse):
    """Test the edge of the projected exercise region is a grid node below K."""

    # Arrange
    params, grid, result = coarse

    # Act
    edges = result.unadjusted.values[1:]

    # Assert
    assert result.unadjusted.values[0] == params.strike
    np.testing.assert_allclose(edges / grid.dx, np.round(edges / grid.dx), atol=1e-9)
    assert np.all(edges < params.strike)
    assert np.all(np.diff(edges) <= 1e-12)


def test_adjusted_boundary_close_to_unadjusted_and_pia(coarse):
    params, grid, result = coarse
    assert result.adjusted.values[0] == params.strike
    assert result.adjusted.distance(result.unadjusted) <= 5.0 * grid.dx
    reference = pia(params, grid)
    assert abs(result.adjusted.at(1.0) - reference.boundary.at(1.0)) <= 2.0 * grid.dx


@pytest.mark.slow
def test_adjusted_reference_boundary():
    params = PutParams()
    grid = PutGrid.build(params, dx=0.05, dt=0.0025)
    result = brennan_schwartz(params, grid)
    for tau, expected in zip(PUT_TAUS, PUT_BOUNDARY_BS):
        assert result.adjusted.at(tau) == pytest.approx(expected, abs=0.05)
    gap = np.max(np.abs(result.adjusted.values[1:] - result.unadjusted.values[1:])) / params.strike
    assert gap < 0.02
