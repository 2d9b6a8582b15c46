"""Toeplitz operators, Fourier coefficients, Grünwald weights and dense matrix functions."""
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import fft as sfft
from scipy import linalg as sla
from scipy.sparse.linalg import LinearOperator
from scipy.special import factorial

from tauprec.constants import (
    ALPHA_MAX,
    ALPHA_MIN,
    NORM_ADMISSION,
    POWER_ITERATIONS,
    POWER_STAGNATION,
    TAYLOR_ENTIRE_CAP,
    TAYLOR_REL_TOL,
)
from tauprec.exceptions import ConvergenceDomainError, DomainError, ShapeError
from tauprec.logger import get_logger

logger = get_logger(__name__)

TWO_PI = 2.0 * np.pi


def _realify(values: np.ndarray, rtol: float = 1e-13) -> np.ndarray:
    """Drop a numerically negligible imaginary part."""
    values = np.asarray(values)
    if not np.iscomplexobj(values):
        return values
    scale = max(float(np.max(np.abs(values), initial=0.0)), 1.0)
    if np.max(np.abs(values.imag), initial=0.0) <= rtol * scale:
        return values.real.copy()
    return values


# --------------------------------------------------------------------------- #
# Fourier symbols
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class FourierSymbol:
    """A complex function of the angle with optional closed-form coefficients.

    ``func`` must accept numpy arrays. ``coeff_rule`` maps integer lags
    (array) to the Fourier coefficients ``a_k`` of
    ``f(θ) = Σ a_k e^{ikθ}``. A non periodic symbol is only defined on
    ``domain`` and refuses evaluation outside it.
    """

    func: Callable[[np.ndarray], np.ndarray]
    name: str = "f"
    domain: Tuple[float, float] = (-np.pi, np.pi)
    real: bool = False
    periodic: bool = True
    coeff_rule: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __call__(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if not self.periodic:
            lo, hi = self.domain
            if np.any(theta < lo - 1e-12) or np.any(theta > hi + 1e-12):
                raise DomainError(
                    f"symbol {self.name} is defined on [{lo:g}, {hi:g}] only"
                )
        values = np.asarray(self.func(theta))
        if self.real:
            return np.real(values).astype(float)
        return values.astype(complex)

    def coefficients(self, n: int) -> np.ndarray:
        """Coefficients ``a_{-(n-1)}..a_{n-1}`` (closed form when known)."""
        return symbol_coefficients(self, n)


def fourier_coeffs_fft(symbol: Callable, n: int) -> np.ndarray:
    """Approximate the Fourier coefficients of ``symbol`` by the FFT.

    The symbol is sampled on ``m = 2n`` uniform nodes of ``[0, 2π)`` and
    ``a_{-k}`` is read off the entry ``m - k``. Exact for trigonometric
    polynomials of degree below ``n``.

    Args:
        symbol (Callable): 2π-periodic function evaluable on ``[0, 2π)``.
        n (int): Size of the Toeplitz matrix the coefficients are for.

    Returns:
        np.ndarray: ``2n - 1`` coefficients ordered ``a_{-(n-1)}..a_{n-1}``.
    """
    if n < 1:
        raise ShapeError(f"n must be positive, got {n}")
    m = 2 * n
    theta = TWO_PI * np.arange(m) / m
    spectrum = sfft.fft(np.asarray(symbol(theta), dtype=complex)) / m
    lags = np.arange(-(n - 1), n)
    return _realify(spectrum[lags % m])


def symbol_coefficients(symbol: FourierSymbol, n: int) -> np.ndarray:
    """Coefficients of ``symbol`` for an ``n × n`` Toeplitz matrix.

    Uses the closed-form rule when the symbol carries one, else the FFT
    approximation.
    """
    if symbol.coeff_rule is None:
        return fourier_coeffs_fft(symbol, n)
    lags = np.arange(-(n - 1), n)
    return _realify(np.asarray(symbol.coeff_rule(lags)))


# --------------------------------------------------------------------------- #
# Grünwald coefficients
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class GrunwaldCoeffs:
    """Signed fractional binomial weights of order ``alpha``.

    Args:
        alpha (float): Fractional order.
        values (np.ndarray): ``g_0..g_K`` or ``w_0..w_K``.
        scheme (str): ``"first"`` or ``"second"``.
    """

    alpha: float
    values: np.ndarray = field(repr=False)
    scheme: str = "first"

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def _check_order(alpha: float) -> None:
    if not ALPHA_MIN < alpha <= ALPHA_MAX:
        raise DomainError(f"fractional order must lie in (1, 2], got {alpha}")


def binomial_series(order: float, count: int) -> np.ndarray:
    """``(-1)^k binom(order, k)`` for ``k = 0..count`` by the product recurrence."""
    k = np.arange(count, dtype=float)
    ratios = (k - order) / (k + 1.0)
    return np.concatenate(([1.0], np.cumprod(ratios)))


def grunwald_coeffs(alpha: float, K: int) -> GrunwaldCoeffs:
    """First-order Grünwald coefficients ``g_0..g_K``.

    Computed by ``g_{k+1} = -((α - k) / (k + 1)) g_k`` from ``g_0 = 1``.

    Args:
        alpha (float): Order in ``(1, 2]``.
        K (int): Highest index.

    Returns:
        GrunwaldCoeffs: The weights.
    """
    _check_order(alpha)
    if K < 1:
        raise DomainError(f"K must be at least 1, got {K}")
    return GrunwaldCoeffs(alpha, binomial_series(alpha, K), "first")


def second_order_weights(alpha: float, K: int) -> GrunwaldCoeffs:
    """Weighted shifted weights ``w_0 = α/2``, ``w_k = (α/2) g_k + ((2-α)/2) g_{k-1}``."""
    g = grunwald_coeffs(alpha, K).values
    w = 0.5 * alpha * g
    w[1:] += 0.5 * (2.0 - alpha) * g[:-1]
    return GrunwaldCoeffs(alpha, w, "second")


# --------------------------------------------------------------------------- #
# Toeplitz operator
# --------------------------------------------------------------------------- #


class ToeplitzOperator:
    """``n × n`` Toeplitz matrix ``T[i, j] = a_{i-j}`` with an FFT matvec.

    Args:
        coeffs (Sequence): ``a_{-(n-1)}..a_{n-1}``.
        n (int): Matrix size.
    """

    def __init__(self, coeffs: Sequence, n: int):
        coeffs = np.asarray(coeffs)
        if coeffs.ndim != 1 or len(coeffs) != 2 * n - 1:
            raise ShapeError(
                f"expected {2 * n - 1} coefficients for n={n}, got {coeffs.shape}"
            )
        self.n = n
        self.coeffs = coeffs
        embedding = np.concatenate((coeffs[n - 1 :], [0.0], coeffs[: n - 1]))
        self._eig = sfft.fft(embedding)
        self._real = not np.iscomplexobj(coeffs)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n, self.n)

    @property
    def first_column(self) -> np.ndarray:
        return self.coeffs[self.n - 1 :]

    @property
    def first_row(self) -> np.ndarray:
        return self.coeffs[self.n - 1 :: -1]

    def coefficient(self, k: int):
        """``a_k`` for ``|k| < n``."""
        return self.coeffs[self.n - 1 + k]

    def matvec(self, x, axis: int = -1) -> np.ndarray:
        """Apply the matrix along ``axis`` of ``x``."""
        x = np.asarray(x)
        if x.shape[axis] != self.n:
            raise ShapeError(f"operand length {x.shape[axis]} != {self.n}")
        moved = np.moveaxis(x, axis, -1)
        y = sfft.ifft(sfft.fft(moved, n=2 * self.n, axis=-1) * self._eig, axis=-1)
        y = y[..., : self.n]
        if self._real and not np.iscomplexobj(x):
            y = y.real
        return np.moveaxis(y, -1, axis)

    def __matmul__(self, x):
        return self.matvec(x, axis=0)

    def transpose(self) -> "ToeplitzOperator":
        return ToeplitzOperator(self.coeffs[::-1], self.n)

    @property
    def T(self) -> "ToeplitzOperator":
        return self.transpose()

    def todense(self) -> np.ndarray:
        return sla.toeplitz(self.first_column, self.first_row)

    def as_linear_operator(self) -> LinearOperator:
        dtype = float if self._real else complex
        return LinearOperator(
            self.shape,
            matvec=lambda v: self.matvec(np.ravel(v)),
            rmatvec=lambda v: self.transpose().matvec(np.ravel(v).conj()).conj(),
            dtype=dtype,
        )


def toeplitz_from_coeffs(coeffs: Sequence, n: int) -> ToeplitzOperator:
    """Build a :class:`ToeplitzOperator` from ``2n - 1`` coefficients."""
    return ToeplitzOperator(coeffs, n)


def fractional_toeplitz(alpha: float, n: int, scheme: str = "first") -> ToeplitzOperator:
    """Shifted Grünwald matrix ``T_{α,n}`` (or ``S_{α,n}`` for ``scheme="second"``).

    ``-g_0`` sits on the first superdiagonal and ``-g_{k+1}`` on subdiagonal
    ``k``; everything above the first superdiagonal vanishes.
    """
    if scheme == "first":
        weights = grunwald_coeffs(alpha, n).values
    elif scheme == "second":
        weights = second_order_weights(alpha, n).values
    else:
        raise DomainError(f"unknown Grünwald scheme {scheme!r}")

    coeffs = np.zeros(2 * n - 1)
    # a_k = -weights[k + 1] for k >= -1
    coeffs[n - 2 if n > 1 else 0 :] = -weights[(0 if n > 1 else 1) : n + 1]
    return ToeplitzOperator(coeffs, n)


def flip_apply(x, axis: int = 0) -> np.ndarray:
    """Apply the anti-identity ``Y_n`` (reverse entries along ``axis``)."""
    return np.flip(np.asarray(x), axis=axis).copy()


# --------------------------------------------------------------------------- #
# Dense matrix functions
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class AnalyticFunction:
    """Descriptor of a function analytic in a disc around the origin.

    Args:
        name (str): Display name.
        coefficient (Callable[[int], float]): Taylor coefficient ``b_k``.
        scalar (Callable): Pointwise evaluation on numpy arrays.
        radius (float): Radius of convergence of the Taylor series.
        kind (str): ``"series"``, ``"polynomial"``, ``"identity"``, ``"exp"``
            or ``"sin"``; the last two dispatch to scipy.
        poly (Tuple[float, ...]): Coefficients ``b_0..b_d`` of a polynomial.
    """

    name: str
    coefficient: Callable[[int], float]
    scalar: Callable[[np.ndarray], np.ndarray]
    radius: float = math.inf
    kind: str = "series"
    poly: Tuple[float, ...] = ()

    def __call__(self, z):
        return self.scalar(np.asarray(z))


def polynomial(coeffs: Sequence[float], name: str = "poly") -> AnalyticFunction:
    """Polynomial ``Σ b_k z^k`` given ``b_0..b_d``."""
    poly = tuple(float(c) for c in coeffs)

    def coefficient(k: int) -> float:
        return poly[k] if k < len(poly) else 0.0

    return AnalyticFunction(
        name=name,
        coefficient=coefficient,
        scalar=lambda z: np.polyval(poly[::-1], z),
        kind="polynomial",
        poly=poly,
    )


def _sin_coefficient(k: int) -> float:
    if k % 2 == 0:
        return 0.0
    return (-1.0) ** ((k - 1) // 2) / float(factorial(k))


def _log1p_coefficient(k: int) -> float:
    return 0.0 if k == 0 else (-1.0) ** (k + 1) / k


IDENTITY = AnalyticFunction(
    "id", lambda k: 1.0 if k == 1 else 0.0, lambda z: z, kind="identity"
)
EXP = AnalyticFunction("exp", lambda k: 1.0 / float(factorial(k)), np.exp, kind="exp")
SIN = AnalyticFunction("sin", _sin_coefficient, np.sin, kind="sin")
LOG1P = AnalyticFunction("log1p", _log1p_coefficient, np.log1p, radius=1.0)
QUADRATIC = polynomial((1.0, 1.0, 1.0), name="1+z+z^2")

ANALYTIC_FUNCTIONS = {
    f.name: f for f in (IDENTITY, EXP, SIN, LOG1P, QUADRATIC)
}


def spectral_norm_estimate(
    A: np.ndarray,
    iterations: int = POWER_ITERATIONS,
    stagnation: float = POWER_STAGNATION,
) -> float:
    """Estimate ``‖A‖₂`` by power iteration on ``AᴴA``."""
    A = np.asarray(A)
    n = A.shape[1]
    if n == 0:
        return 0.0
    v = np.random.default_rng(0).standard_normal(n)
    v /= np.linalg.norm(v)
    estimate = 0.0
    for _ in range(iterations):
        w = A.conj().T @ (A @ v)
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        new_estimate = math.sqrt(norm_w)
        v = w / norm_w
        if estimate and abs(new_estimate - estimate) <= stagnation * new_estimate:
            estimate = new_estimate
            break
        estimate = new_estimate
    return estimate


def _horner(poly: Tuple[float, ...], A: np.ndarray) -> np.ndarray:
    identity = np.eye(A.shape[0], dtype=A.dtype)
    result = poly[-1] * identity
    for c in reversed(poly[:-1]):
        result = result @ A + c * identity
    return result


def matrix_function_dense(
    h: AnalyticFunction, A, radius: Optional[float] = None
) -> np.ndarray:
    """Evaluate ``h(A)`` for a dense square matrix.

    Polynomials use Horner, ``exp`` uses scaling and squaring and ``sin``
    scipy's ``sinm``. Other functions are summed as a Taylor series after
    checking ``‖A‖₂ < 0.99 r`` with a power-iteration estimate.

    Args:
        h (AnalyticFunction): Function descriptor.
        A (array_like): Square matrix.
        radius (Optional[float], optional): Overrides ``h.radius``.

    Returns:
        np.ndarray: ``h(A)``.
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"matrix function needs a square matrix, got {A.shape}")
    if not np.issubdtype(A.dtype, np.inexact):
        A = A.astype(float)

    if h.kind == "identity":
        return A.copy()
    if h.kind == "polynomial":
        return _horner(h.poly, A)
    if h.kind == "exp":
        return sla.expm(A)
    if h.kind == "sin":
        return sla.sinm(A)

    r = h.radius if radius is None else radius
    norm = spectral_norm_estimate(A)
    if norm >= NORM_ADMISSION * r:
        raise ConvergenceDomainError(
            f"‖A‖ ≈ {norm:.4g} is not below {NORM_ADMISSION} × radius {r:g} for {h.name}"
        )

    if math.isinf(r):
        cap = TAYLOR_ENTIRE_CAP
    else:
        cap = math.ceil(10.0 * r / (r - norm))
        ratio = norm / r
        if 0.0 < ratio < 1.0:
            cap = max(cap, math.ceil(math.log(1e-16) / math.log(ratio)))

    identity = np.eye(A.shape[0], dtype=A.dtype)
    result = h.coefficient(0) * identity
    power = identity
    for k in range(1, cap + 1):
        power = power @ A
        result = result + h.coefficient(k) * power
        scale = max(abs(h.coefficient(k)), abs(h.coefficient(k + 1)))
        power_norm = np.linalg.norm(power)
        if power_norm * scale < TAYLOR_REL_TOL * max(np.linalg.norm(result), 1e-300):
            logger.debug("Taylor series for %s stopped after %d terms", h.name, k)
            break
    else:
        logger.debug("Taylor series for %s reached the cap of %d terms", h.name, cap)
    return result
