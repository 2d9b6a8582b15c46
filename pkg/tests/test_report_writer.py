"""Tests for report_writer module."""
import numpy as np
import pytest

from tauprec.report_writer import (
    RunOutput,
    schema_line,
    write_csv,
    write_plot_script,
    write_report,
    write_table,
)


def test_write_csv(tmp_path):
    """Test the schema line, the header and full precision values."""

    # Arrange
    path = tmp_path / "sub" / "data.csv"

    # Act
    written = write_csv(path, "spectrum", {"k": [1, 2], "value": [0.1, 1 / 3]})

    # Assert
    lines = written.read_text().splitlines()
    assert written == path
    assert lines[0] == schema_line("spectrum")
    assert lines[1] == "k,value"
    assert float(lines[3].split(",")[1]) == 1 / 3


def test_write_csv_splits_complex_columns(tmp_path):
    path = write_csv(tmp_path / "c.csv", "eig", {"lam": np.array([1 + 2j, 3 - 1j])})
    lines = path.read_text().splitlines()
    assert lines[1] == "lam_re,lam_im"
    np.testing.assert_allclose(np.loadtxt(path, delimiter=",", skiprows=2), [[1, 2], [3, -1]])


def test_write_csv_rejects_unequal_columns(tmp_path):
    with pytest.raises(ValueError):
        write_csv(tmp_path / "x.csv", "x", {"a": [1, 2], "b": [1]})


def test_write_csv_without_columns(tmp_path):
    lines = write_csv(tmp_path / "empty.csv", "empty", {}).read_text().splitlines()
    assert lines == [schema_line("empty"), ""]


def test_write_table(tmp_path):
    path = write_table(
        tmp_path / "t.csv",
        "iterations",
        ["n", "precond", "iterations", "converged"],
        [[64, "P_F", 7.0, True], [128, "I", None, False]],
    )
    lines = path.read_text().splitlines()
    assert lines[1] == "n,precond,iterations,converged"
    assert lines[2] == "64,P_F,7,true"
    assert lines[3] == "128,I,n/a,false"


def test_write_report(tmp_path):
    path = write_report(tmp_path / "report.txt", {"iterations": 4, "residual": 0.5, "converged": True})
    assert path.read_text().splitlines() == ["iterations = 4", "residual = 0.5", "converged = true"]


def test_write_plot_script(tmp_path):
    path = write_plot_script(tmp_path / "b.gp", "boundary.csv", 1, [2, 3], "Boundary", ["pia", "reference"])
    text = path.read_text()
    assert "set datafile separator ','" in text
    assert "'boundary.csv' using 1:2 with points title 'pia'" in text
    assert "using 1:3 with points title 'reference'" in text
    assert "set title 'Boundary'" in text


def test_run_output_defaults():
    output = RunOutput()
    assert output.files == []
    assert output.metrics == {}
