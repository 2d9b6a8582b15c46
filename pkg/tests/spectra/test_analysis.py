"""Tests for analysis module."""
from unittest.mock import patch

import numpy as np
import pytest

from tauprec.algebras import CirculantOperator
from tauprec.exceptions import DefinitenessError, ShapeError, SingularityError
from tauprec.krylov import LinearMap
from tauprec.spectra.analysis import (
    SpectrumReport,
    cluster_outliers,
    condition_number,
    dense_eigs,
    dense_svd,
    distribution_compare,
    preconditioned_eigs,
    scaled_spectrum,
)
from tauprec.symbols import SymbolGrid, trigonometric_polynomial


def test_dense_eigs_sorted_and_symmetric(rng):
    B = rng.standard_normal((8, 8))
    A = B + B.T
    report = dense_eigs(A)
    assert report.kind == "eig"
    assert not np.iscomplexobj(report.values)
    assert np.all(np.diff(report.values) >= 0)
    np.testing.assert_allclose(report.values, np.linalg.eigvalsh(A), atol=1e-12)


def test_dense_eigs_complex_and_linear_map():
    rotation = np.array([[0.0, -1.0], [1.0, 0.0]])
    report = dense_eigs(LinearMap.from_matrix(rotation))
    np.testing.assert_allclose(np.sort(report.values.imag), [-1.0, 1.0], atol=1e-14)
    np.testing.assert_allclose(report.values.real, 0.0, atol=1e-14)


def test_dense_svd_descending(rng):
    A = rng.standard_normal((6, 6))
    report = dense_svd(A)
    assert report.kind == "svd"
    assert np.all(np.diff(report.values) <= 0)
    np.testing.assert_allclose(report.values, np.linalg.svd(A, compute_uv=False), atol=1e-12)


def test_dense_analysis_rejects_non_square_and_large():
    with pytest.raises(ShapeError):
        dense_eigs(np.ones((2, 3)))
    with patch("tauprec.spectra.analysis.EIG_CAP", 2):
        with pytest.raises(ShapeError):
            dense_svd(np.eye(3))


def test_compare_circulant_with_its_symbol():
    """Test a circulant spectrum equals the symbol sampled on the circulant grid."""

    # Arrange
    f = trigonometric_polynomial({-1: 1.0, 0: 0.5, 1: 1.0})
    column = np.zeros(16)
    column[0], column[1], column[-1] = 0.5, 1.0, 1.0

    # Act
    report = dense_eigs(CirculantOperator(column).todense()).compare(f, eps=1e-8)

    # Assert
    assert report.deviation < 1e-12
    assert report.outliers == 0
    assert report.symbol_samples.shape == (16,)


def test_distribution_compare_counts_outliers():
    deviation, outliers = distribution_compare([0.0, 1.0, 5.0], [0.0, 1.0, 2.0], eps=0.5)
    assert deviation == pytest.approx(3.0)
    assert outliers == 1
    with pytest.raises(ShapeError):
        distribution_compare([1.0], [1.0, 2.0])


def test_distribution_compare_svd_uses_magnitudes():
    deviation, _ = distribution_compare([3.0, 1.0], [-1.0, 3.0], kind="svd")
    assert deviation == pytest.approx(0.0)


def test_distribution_compare_with_grid():
    f = trigonometric_polynomial({0: 2.0})
    deviation, outliers = distribution_compare(np.full(4, 2.0), f, grid=SymbolGrid("tau", 4))
    assert deviation == pytest.approx(0.0)
    assert outliers == 0


def test_cluster_outliers():
    values = np.array([1.0, 1.05, 0.98 + 0.02j, 3.0, -2.0])
    assert cluster_outliers(values, targets=[1.0]) == 2
    assert cluster_outliers(values, interval=(-2.0, 1.0)) == 1
    with pytest.raises(ShapeError):
        cluster_outliers(values)


def test_condition_number():
    assert condition_number(np.diag([1.0, 10.0])) == pytest.approx(10.0)
    assert condition_number(np.zeros((2, 2))) == float("inf")


def test_preconditioned_eigs(rng):
    B = rng.standard_normal((5, 5))
    P = B @ B.T + 5 * np.eye(5)
    np.testing.assert_allclose(preconditioned_eigs(2 * P, P), np.full(5, 2.0), atol=1e-10)
    with pytest.raises(DefinitenessError):
        preconditioned_eigs(P, -np.eye(5))


def test_scaled_spectrum():
    """Test scaling by the centre of the enclosing circle."""

    # Act
    result = scaled_spectrum(np.array([1.0, 2.0, 3.0]))

    # Assert
    assert result.center == pytest.approx(2.0)
    assert result.radius == pytest.approx(1.0)
    assert result.scaled_radius == pytest.approx(0.5)
    np.testing.assert_allclose(result.values, [0.5, 1.0, 1.5])


def test_scaled_spectrum_centred_at_origin():
    with pytest.raises(SingularityError):
        scaled_spectrum(np.array([-1.0, 1.0]))


def test_report_enclose():
    report = SpectrumReport(values=np.array([0.0, 2.0]), n=2).enclose()
    assert report.circle.center == pytest.approx(1.0)
    assert report.circle.radius == pytest.approx(1.0)
