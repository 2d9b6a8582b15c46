"""Tests for fde_tables module."""
import pytest

from tauprec.bench.fde_tables import DEFAULT_ALPHAS_1D, parse_choices, run_fde1d, run_fde2d
from tauprec.bench.reference import ITERATIONS_1D, ITERATIONS_2D, KAPPA_1D, KAPPA_2D, SIZES_2D, lookup
from tauprec.config import RunConfig
from tauprec.exceptions import ConfigError
from tauprec.fde.preconditioners import CHOICES_1D, CHOICES_2D, PrecondChoice


def test_parse_choices():
    assert parse_choices("", CHOICES_1D) == list(CHOICES_1D)
    assert parse_choices("tau-symbol, identity", CHOICES_1D) == [PrecondChoice.TAU_SYMBOL, PrecondChoice.IDENTITY]


@pytest.mark.parametrize("raw,allowed", [("multigrid", CHOICES_1D), ("circulant", CHOICES_2D)])
def test_parse_choices_rejects(raw, allowed):
    with pytest.raises(ConfigError):
        parse_choices(raw, allowed)


def test_run_fde1d(tmp_path):
    """Test a small table with spectra written for each run."""

    # Arrange
    config = RunConfig(
        experiment="fde1d", alphas=(1.5,), sizes=(15,), precond="tau-symbol,identity", spectra=True, out=tmp_path
    )

    # Act
    output = run_fde1d(config)

    # Assert
    lines = (tmp_path / "fde1d.csv").read_text().splitlines()
    assert lines[1].startswith("alpha,beta,n,preconditioner,iterations")
    assert len(lines) == 4
    assert ",P_F," in lines[2]
    assert lines[2].endswith("n/a,n/a")
    assert len(list((tmp_path / "spectra").glob("*.csv"))) == 2
    assert output.metrics["runs"] == 2
    assert output.metrics["P_F_a1.5_n15_iterations"] > 0


def test_run_fde1d_reference_columns(tmp_path):
    config = RunConfig(alphas=(1.5,), sizes=(63,), precond="tau-symbol", out=tmp_path, dense_cap=8)
    run_fde1d(config)
    row = (tmp_path / "fde1d.csv").read_text().splitlines()[2].split(",")
    assert float(row[-2]) == 6.7
    assert float(row[-1]) == 16.1
    assert row[6] == "n/a"


def test_run_fde1d_workers_agree(tmp_path):
    base = dict(alphas=(1.8,), sizes=(15,), precond="tau-symbol,tridiagonal")
    serial = run_fde1d(RunConfig(out=tmp_path / "a", workers=1, **base))
    threaded = run_fde1d(RunConfig(out=tmp_path / "b", workers=2, **base))
    for key in ("P_F_a1.8_n15_iterations", "P_tri_a1.8_n15_iterations"):
        assert serial.metrics[key] == threaded.metrics[key]


def test_run_fde2d(tmp_path):
    config = RunConfig(experiment="fde2d", example="3", sizes=(4,), precond="tau-symbol", out=tmp_path)
    output = run_fde2d(config)
    lines = (tmp_path / "fde2d.csv").read_text().splitlines()
    assert len(lines) == 3
    assert lines[2].startswith("1.8,1.2,4,P_F,")
    assert output.metrics["beta"] == 1.2


def test_run_fde2d_unknown_example(tmp_path):
    with pytest.raises(ConfigError):
        run_fde2d(RunConfig(example="9", out=tmp_path))


@pytest.mark.slow
def test_run_fde1d_matches_published_tables(tmp_path):
    """Test P_F, P_full and P_tri against the published iterations (±2) and κ (15%)."""

    # Arrange
    sizes = (63, 127, 255)
    config = RunConfig(
        alphas=DEFAULT_ALPHAS_1D, sizes=sizes, precond="tau-symbol,full-symbol,tridiagonal", out=tmp_path, workers=2
    )

    # Act
    output = run_fde1d(config)

    # Assert
    for label in ("P_F", "P_full", "P_tri"):
        for alpha in DEFAULT_ALPHAS_1D:
            for n in sizes:
                key = f"{label}_a{alpha:g}_n{n}"
                assert output.metrics[f"{key}_iterations"] == pytest.approx(
                    lookup(ITERATIONS_1D, label, alpha, n), abs=2.0
                ), key
                kappa = lookup(KAPPA_1D, label, alpha, n)
                if kappa is not None:
                    assert output.metrics[f"{key}_kappa"] == pytest.approx(kappa, rel=0.15), key


@pytest.mark.slow
@pytest.mark.parametrize("example", ["2", "3"])
def test_run_fde2d_matches_published_tables(tmp_path, example):
    config = RunConfig(example=example, sizes=(16, 32), precond="tau-symbol", out=tmp_path)
    output = run_fde2d(config)
    for n in (16, 32):
        key = f"P_F_a1.8_n{n}"
        expected = lookup(ITERATIONS_2D[example], "P_F", 1.8, n, SIZES_2D)
        assert output.metrics[f"{key}_iterations"] == pytest.approx(expected, abs=2.0)
        kappa = lookup(KAPPA_2D[example], "P_F", 1.8, n, SIZES_2D)
        assert output.metrics[f"{key}_kappa"] == pytest.approx(kappa, rel=0.15)
