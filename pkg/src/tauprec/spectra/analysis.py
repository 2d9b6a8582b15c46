"""Dense spectral analysis: eigenvalues, singular values and their comparison with symbols."""
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Tuple, Union

import numpy as np
from scipy import linalg as sla

from tauprec.constants import EIG_CAP, EPS_CLUSTER, EPS_OUTLIER
from tauprec.exceptions import ConvergenceError, DefinitenessError, ShapeError, SingularityError
from tauprec.krylov import LinearMap
from tauprec.logger import get_logger
from tauprec.spectra.welzl import Circle, enclosing_circle
from tauprec.symbols import SymbolGrid
from tauprec.toeplitz_core import FourierSymbol

logger = get_logger(__name__)

MatrixLike = Union[np.ndarray, LinearMap]


@dataclass
class SpectrumReport:
    """Sorted eigenvalues or singular values of a dense matrix.

    Args:
        values (np.ndarray): Eigenvalues sorted ascending (lexicographically
            for complex ones) or singular values sorted descending.
        n (int): Size of the source matrix.
        kind (str): ``"eig"`` or ``"svd"``.
        symbol_samples (Optional[np.ndarray]): Sorted symbol samples of the
            same length.
        deviation (Optional[float]): Largest sorted deviation from the samples.
        outliers (Optional[int]): Entries deviating by more than ``eps``.
        circle (Optional[Circle]): Smallest circle enclosing the values.
    """

    values: np.ndarray
    n: int
    kind: str = "eig"
    symbol_samples: Optional[np.ndarray] = None
    deviation: Optional[float] = None
    outliers: Optional[int] = None
    circle: Optional[Circle] = None

    def compare(self, symbol, grid: Optional[SymbolGrid] = None, eps: float = EPS_OUTLIER) -> "SpectrumReport":
        """Fill the symbol companion, deviation and outlier count."""
        samples = _symbol_samples(symbol, self.n, grid)
        self.deviation, self.outliers = distribution_compare(self.values, samples, eps=eps, kind=self.kind)
        self.symbol_samples = _sorted(samples, self.kind)
        return self

    def enclose(self, seed: int = 0) -> "SpectrumReport":
        self.circle = enclosing_circle(self.values, seed=seed)
        return self


def _as_dense(A: MatrixLike) -> Tuple[np.ndarray, Optional[bool]]:
    if isinstance(A, LinearMap):
        return A.todense(), A.symmetric or None
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"square matrix expected, got {A.shape}")
    return A, None


def _check_cap(n: int) -> None:
    if n > EIG_CAP:
        raise ShapeError(f"dense spectral analysis is capped at n={EIG_CAP}, got {n}")


def _sorted(values: np.ndarray, kind: str) -> np.ndarray:
    values = np.asarray(values)
    if kind == "svd":
        return np.sort(np.abs(values))[::-1]
    if np.iscomplexobj(values) and np.allclose(values.imag, 0.0):
        values = values.real
    return np.sort(values)


def _symbol_samples(symbol, n: int, grid: Optional[SymbolGrid]) -> np.ndarray:
    if not callable(symbol):
        return np.asarray(symbol)
    if grid is None:
        periodic = not isinstance(symbol, FourierSymbol) or symbol.periodic
        grid = SymbolGrid("circulant" if periodic else "uniform2pi", n)
    return np.asarray(symbol(grid.nodes))


def dense_eigs(A: MatrixLike, symmetric: Optional[bool] = None) -> SpectrumReport:
    """Eigenvalues of a dense matrix, ascending.

    Args:
        A (Union[np.ndarray, LinearMap]): Square matrix or operator.
        symmetric (Optional[bool], optional): Use the Hermitian solver.
            Detected when omitted.

    Returns:
        SpectrumReport: Sorted eigenvalues.

    Raises:
        ConvergenceError: LAPACK did not converge.
    """
    A, declared = _as_dense(A)
    _check_cap(A.shape[0])
    if symmetric is None:
        symmetric = declared if declared is not None else bool(np.allclose(A, A.conj().T))
    try:
        values = sla.eigvalsh(A) if symmetric else sla.eigvals(A)
    except sla.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue decomposition failed: {exc}") from exc
    return SpectrumReport(values=_sorted(values, "eig"), n=A.shape[0], kind="eig")


def dense_svd(A: MatrixLike) -> SpectrumReport:
    """Singular values of a dense matrix, descending."""
    A, _ = _as_dense(A)
    _check_cap(A.shape[0])
    try:
        values = sla.svdvals(A)
    except sla.LinAlgError as exc:
        raise ConvergenceError(f"singular value decomposition failed: {exc}") from exc
    return SpectrumReport(values=_sorted(values, "svd"), n=A.shape[0], kind="svd")


def distribution_compare(
    values, symbol, grid: Optional[SymbolGrid] = None, eps: float = EPS_OUTLIER, kind: str = "eig"
) -> Tuple[float, int]:
    """Compare a spectrum with the samples of a symbol after sorting both.

    Args:
        values (array_like): Eigenvalues or singular values.
        symbol (Union[FourierSymbol, array_like]): Symbol or its samples.
        grid (Optional[SymbolGrid], optional): Sampling grid of a callable
            symbol. Defaults to the circulant grid for periodic symbols and
            the uniform grid of ``[-2π, 2π]`` otherwise.
        eps (float, optional): Outlier threshold. Defaults to 0.5.
        kind (str, optional): ``"eig"`` sorts by value, ``"svd"`` by magnitude.

    Returns:
        Tuple[float, int]: Maximum deviation and number of entries above ``eps``.
    """
    values = np.asarray(values)
    samples = _symbol_samples(symbol, values.size, grid)
    if samples.size != values.size:
        raise ShapeError(f"{values.size} values against {samples.size} symbol samples")
    if values.size == 0:
        return 0.0, 0
    deviation = np.abs(_sorted(values, kind) - _sorted(samples, kind))
    return float(deviation.max()), int(np.count_nonzero(deviation > eps))


def cluster_outliers(
    values,
    targets: Optional[Iterable[complex]] = None,
    interval: Optional[Tuple[float, float]] = None,
    eps: float = EPS_CLUSTER,
) -> int:
    """Number of values farther than ``eps`` from every target point (or from the interval)."""
    values = np.asarray(values).ravel()
    if (targets is None) == (interval is None):
        raise ShapeError("give exactly one of targets or interval")
    if targets is not None:
        points = np.asarray(list(targets), dtype=complex)
        distance = np.min(np.abs(values[:, None] - points[None, :]), axis=1)
    else:
        lo, hi = interval
        real = np.real(values)
        outside = np.maximum(lo - real, 0.0) + np.maximum(real - hi, 0.0)
        distance = np.hypot(outside, np.imag(values))
    return int(np.count_nonzero(distance > eps))


def condition_number(A) -> float:
    """``κ₂ = σ_max / σ_min``; infinite for singular matrices."""
    A, _ = _as_dense(A)
    sigma = sla.svdvals(A)
    if sigma[-1] == 0.0:
        return float("inf")
    return float(sigma[0] / sigma[-1])


def preconditioned_eigs(A, P) -> np.ndarray:
    """Eigenvalues of ``P⁻¹A`` for symmetric ``A`` and SPD ``P``, ascending.

    Raises:
        DefinitenessError: ``P`` is not positive definite.
    """
    A, _ = _as_dense(A)
    P, _ = _as_dense(P)
    if A.shape != P.shape:
        raise ShapeError(f"pencil of shapes {A.shape} and {P.shape}")
    _check_cap(A.shape[0])
    try:
        return sla.eigh(A, P, eigvals_only=True)
    except sla.LinAlgError as exc:
        raise DefinitenessError(f"preconditioner is not positive definite: {exc}") from exc


class ScaledSpectrum(NamedTuple):
    values: np.ndarray
    center: complex
    radius: float
    scaled_radius: float


def scaled_spectrum(values, seed: int = 0) -> ScaledSpectrum:
    """Divide a spectrum by the centre of its smallest enclosing circle.

    The scaled values lie in the circle of radius ``ρ/|c₀|`` centred at 1.

    Raises:
        SingularityError: The enclosing circle is centred at the origin.
    """
    values = np.asarray(values)
    circle = enclosing_circle(values, seed=seed)
    if circle.center == 0:
        raise SingularityError("enclosing circle centred at the origin")
    scaled = values / circle.center
    if not np.iscomplexobj(values) or np.allclose(np.imag(scaled), 0.0):
        scaled = np.real(scaled)
    logger.debug("enclosing circle c0=%s rho=%.4g", circle.center, circle.radius)
    return ScaledSpectrum(scaled, circle.center, circle.radius, circle.radius / abs(circle.center))
