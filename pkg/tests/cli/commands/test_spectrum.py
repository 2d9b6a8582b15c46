"""Tests for spectrum module."""
from unittest.mock import patch

from typer.testing import CliRunner

from tauprec.cli.main import app
from tauprec.exceptions import SingularityError
from tauprec.report_writer import RunOutput

runner = CliRunner()


def test_spectrum_happy_path(tmp_path):
    """Test a small eigenvalue run writes its files."""

    # Arrange
    args = ["spectrum", "--example", "sin", "--size", "16", "--out", str(tmp_path), "--plot"]

    # Act
    result = runner.invoke(app, args)

    # Assert
    assert result.exit_code == 0, result.output
    assert (tmp_path / "eigs.csv").exists()
    assert (tmp_path / "spectrum.gp").exists()
    assert "Results written to" in result.output


def test_spectrum_passes_overrides(tmp_path):
    with patch("tauprec.cli.commands.spectrum.run_spectrum", return_value=RunOutput()) as mock_run:
        result = runner.invoke(app, ["spectrum", "-e", "finance", "-m", "svd", "-n", "40", "--out", str(tmp_path)])

    assert result.exit_code == 0, result.output
    config = mock_run.call_args.args[0]
    assert config.example == "finance"
    assert config.mode == "svd"
    assert config.sizes == (40,)
    assert config.experiment == "spectrum"
    assert mock_run.call_args.kwargs == {"plot": False}


def test_spectrum_dry_run_writes_nothing(tmp_path):
    out = tmp_path / "out"
    with patch("tauprec.cli.commands.spectrum.run_spectrum") as mock_run:
        result = runner.invoke(app, ["spectrum", "--out", str(out), "--dry-run"])

    assert result.exit_code == 0
    assert "Dry run completed" in result.output
    mock_run.assert_not_called()
    assert not out.exists()


def test_spectrum_bad_mode_is_a_usage_error():
    result = runner.invoke(app, ["spectrum", "--mode", "qr"])
    assert result.exit_code == 2
    assert "Error" in result.output


def test_spectrum_numerical_failure(tmp_path):
    with patch(
        "tauprec.cli.commands.spectrum.run_spectrum", side_effect=SingularityError("enclosing circle centred at 0")
    ):
        result = runner.invoke(app, ["spectrum", "--out", str(tmp_path)])

    assert result.exit_code == 1
    assert "enclosing circle" in result.output


def test_spectrum_config_file(tmp_path):
    config_file = tmp_path / "run.cfg"
    config_file.write_text("example = log\nsizes = 24\n")
    with patch("tauprec.cli.commands.spectrum.run_spectrum", return_value=RunOutput()) as mock_run:
        result = runner.invoke(app, ["spectrum", "--config", str(config_file), "--size", "12"])

    assert result.exit_code == 0, result.output
    config = mock_run.call_args.args[0]
    assert config.example == "log"
    assert config.sizes == (12,)
