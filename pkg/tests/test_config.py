"""Tests for config module."""
import os
from pathlib import Path
from unittest.mock import patch

import pytest

from tauprec.config import WORKERS_ENV, RunConfig, load_config
from tauprec.exceptions import ConfigError


def test_defaults():
    config = load_config()
    assert config == RunConfig()
    assert config.mode == "eig"
    assert config.sizes == ()
    assert config.tol is None
    assert config.out == Path("tauprec_output")


def test_file_values_and_overrides(tmp_path):
    """Test a config file is read and command-line values win over it."""

    # Arrange
    path = tmp_path / "run.cfg"
    path.write_text(
        "# put run\n"
        "sizes=64,128\n"
        "alphas=1.2, 1.5\n"
        "tol=1e-9\n"
        "spectra=yes\n"
        "out=results\n"
        "dt=none\n"
    )

    # Act
    config = load_config(path, {"tol": 1e-6, "seed": None, "mode": "svd"})

    # Assert
    assert config.sizes == (64, 128)
    assert config.alphas == (1.2, 1.5)
    assert config.tol == 1e-6
    assert config.seed == 0
    assert config.spectra is True
    assert config.out == Path("results")
    assert config.dt is None
    assert config.mode == "svd"


def test_overrides_coerce_strings_and_sequences():
    config = load_config(overrides={"sizes": "8,16", "alphas": [1.5], "adjusted": "off", "maxit": "30"})
    assert config.sizes == (8, 16)
    assert config.alphas == (1.5,)
    assert config.adjusted is False
    assert config.maxit == 30


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="does not exist"):
        load_config(tmp_path / "absent.cfg")


def test_unknown_key_in_file(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("colour=blue\n")
    with pytest.raises(ConfigError, match="unknown config key"):
        load_config(path)


def test_unknown_override():
    with pytest.raises(ConfigError, match="unknown option"):
        load_config(overrides={"colour": "blue"})


@pytest.mark.parametrize(
    "overrides",
    [
        {"sizes": "8,x"},
        {"spectra": "maybe"},
        {"tol": "small"},
        {"mode": "qr"},
        {"tol": "-1"},
        {"b0_ratio": "1.5"},
        {"workers": "0"},
        {"eps_cluster": "0"},
    ],
)
def test_bad_values(overrides):
    with pytest.raises(ConfigError):
        load_config(overrides=overrides)


def test_workers_from_environment():
    with patch.dict(os.environ, {WORKERS_ENV: "3"}):
        assert RunConfig().workers == 3


def test_workers_from_environment_not_an_integer():
    with patch.dict(os.environ, {WORKERS_ENV: "many"}):
        with pytest.raises(ConfigError):
            RunConfig()


def test_as_dict_lists_every_field():
    values = RunConfig(experiment="spectrum").as_dict()
    assert values["experiment"] == "spectrum"
    assert "mc_dt_ratio" in values
