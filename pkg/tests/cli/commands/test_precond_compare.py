"""Tests for precond_compare module."""
from unittest.mock import patch

from typer.testing import CliRunner

from tauprec.cli.main import app
from tauprec.report_writer import RunOutput

runner = CliRunner()


def test_precond_compare_happy_path(tmp_path):
    result = runner.invoke(app, ["precond-compare", "-e", "sin", "-n", "24", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "iterations.csv").exists()
    assert "iterations_0" in result.output


def test_precond_compare_overrides(tmp_path):
    with patch("tauprec.cli.commands.precond_compare.run_precond_compare", return_value=RunOutput()) as mock_run:
        result = runner.invoke(
            app, ["precond-compare", "--tol", "1e-9", "--maxit", "50", "--eps", "0.2", "--out", str(tmp_path)]
        )

    assert result.exit_code == 0, result.output
    config = mock_run.call_args.args[0]
    assert config.tol == 1e-9
    assert config.maxit == 50
    assert config.eps_cluster == 0.2


def test_precond_compare_dry_run(tmp_path):
    with patch("tauprec.cli.commands.precond_compare.run_precond_compare") as mock_run:
        result = runner.invoke(app, ["precond-compare", "--dry-run", "--out", str(tmp_path / "x")])

    assert result.exit_code == 0
    mock_run.assert_not_called()
    assert not (tmp_path / "x").exists()


def test_precond_compare_unknown_example(tmp_path):
    result = runner.invoke(app, ["precond-compare", "-e", "bessel", "--out", str(tmp_path)])
    assert result.exit_code == 1
    assert "unknown spectrum example" in result.output
