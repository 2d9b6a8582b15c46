"""Tests for put_tables module."""
import pytest

from tauprec.bench.put_tables import REFERENCE_PARAMS, put_setup, run_put_pia
from tauprec.bench.reference import PUT_TAUS, SIMULATION
from tauprec.config import RunConfig


@pytest.fixture(scope="module")
def coarse_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("put")
    config = RunConfig(experiment="put-pia", dx=1.0, dt=0.02, mc=True, paths=500, out=out)
    return out, run_put_pia(config, plot=True)


def test_put_setup():
    params, grid = put_setup(RunConfig(dx=1.0, dt=0.02))
    assert params == REFERENCE_PARAMS
    assert grid.dx == 1.0
    assert grid.steps == 50


def test_run_put_pia_boundary_table(coarse_run):
    """Test the boundary table carries both methods and the reference columns."""

    # Arrange
    out, output = coarse_run

    # Act
    lines = (out / "boundary.csv").read_text().splitlines()

    # Assert
    assert lines[1] == "tau,pia,reference_pia,bs_adjusted,bs_unadjusted,reference_bs"
    assert len(lines) == 2 + len(PUT_TAUS)
    rows = [[float(cell) for cell in line.split(",")] for line in lines[2:]]
    assert [row[0] for row in rows] == list(PUT_TAUS)
    for tau, pia_value, reference_pia, adjusted, _, reference_bs in rows:
        if tau >= 0.3:
            assert abs(pia_value - reference_pia) < 2.5
            assert abs(adjusted - reference_bs) < 3.0
    names = {path.name for path in output.files}
    assert {"boundary.csv", "trace.csv", "simulation.csv", "report.txt", "boundary.gp"} == names


def test_run_put_pia_metrics(coarse_run):
    out, output = coarse_run
    metrics = output.metrics
    assert metrics["iterations"] >= 1
    assert metrics["perpetual_boundary"] < metrics["boundary_at_horizon"] < 100.0
    assert 0 <= metrics["bs_relative_gap"] < 0.1
    trace = (out / "trace.csv").read_text().splitlines()
    assert len(trace) == 2 + metrics["iterations"]
    assert "pasting_residual = " in (out / "report.txt").read_text()


def test_run_put_pia_simulation_table(coarse_run):
    out, _ = coarse_run
    lines = (out / "simulation.csv").read_text().splitlines()
    assert len(lines) == 2 + len(SIMULATION)
    for line in lines[2:]:
        price, pde, mean, stderr, value, _, _ = (float(cell) for cell in line.split(","))
        assert price in SIMULATION
        assert abs(pde - value) < 1.0
        assert abs(mean - pde) < 5 * stderr + 0.5


def test_run_put_pia_without_reference(tmp_path):
    config = RunConfig(horizon=0.5, dx=1.0, dt=0.02, adjusted=False, out=tmp_path)
    run_put_pia(config)
    lines = (tmp_path / "boundary.csv").read_text().splitlines()
    assert lines[1] == "tau,pia,reference_pia"
    assert all(line.endswith(",n/a") for line in lines[2:])
    assert len(lines) == 2 + sum(t <= 0.5 for t in PUT_TAUS)
    assert not (tmp_path / "simulation.csv").exists()
