"""Named spectral examples: a symbol ``f``, an analytic ``h`` and the matrices built from them."""
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from scipy.stats import norm

from tauprec.algebras import CirculantOperator, circulant_abs, circulant_matfun, optimal_frobenius_circulant
from tauprec.exceptions import DomainError
from tauprec.logger import get_logger
from tauprec.symbols import compose, modulus, psi_symmetrized, trigonometric_polynomial
from tauprec.toeplitz_core import (
    EXP,
    LOG1P,
    QUADRATIC,
    SIN,
    AnalyticFunction,
    FourierSymbol,
    ToeplitzOperator,
    fourier_coeffs_fft,
    matrix_function_dense,
    symbol_coefficients,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class SpectrumExample:
    """One example of the spectral experiments.

    Args:
        name (str): Key used on the command line.
        f (FourierSymbol): Generating symbol of the Toeplitz matrix.
        h (AnalyticFunction): Function applied to the matrix.
        n (int): Default size.
    """

    name: str
    f: FourierSymbol
    h: AnalyticFunction
    n: int

    def toeplitz(self, n: Optional[int] = None) -> ToeplitzOperator:
        n = self.n if n is None else n
        return ToeplitzOperator(symbol_coefficients(self.f, n), n)

    @property
    def composed(self) -> FourierSymbol:
        return compose(self.h, self.f)

    @property
    def eig_symbol(self) -> FourierSymbol:
        """Symbol describing the eigenvalues of ``Y h(T_n(f))``."""
        return psi_symmetrized(modulus(self.composed))

    @property
    def svd_symbol(self) -> FourierSymbol:
        """Symbol describing the singular values of ``h(T_n(f))``."""
        return modulus(self.composed)


# Jump-diffusion parameters of the finance example.
FINANCE_PARAMS = {
    "lam": 0.1,
    "mu": -0.9,
    "nu": 0.25,
    "sigma": 0.45,
    "r": 0.05,
    "dx": 4.0 / 101.0,
    "n": 100,
}


def finance_coefficients(
    lam: float = 0.1,
    mu: float = -0.9,
    nu: float = 0.25,
    sigma: float = 0.45,
    r: float = 0.05,
    dx: float = 4.0 / 101.0,
    n: int = 100,
) -> Dict[int, float]:
    """Fourier coefficients of the jump-diffusion pricing symbol, lags ``-(n-1)..n-1``.

    The jump sizes are normal with mean ``mu`` and deviation ``sigma``;
    ``nu`` is the diffusion volatility.
    """
    w = norm(loc=mu, scale=sigma).pdf
    kappa = np.exp(mu + 0.5 * sigma**2) - 1.0
    drift = dx * (2.0 * r - 2.0 * lam * kappa - nu**2) / 4.0

    coeffs = {j: lam * dx**3 * float(w(-j * dx)) for j in range(-(n - 1), n) if abs(j) >= 2}
    coeffs[0] = -(nu**2) - dx**2 * (r + lam - lam * float(w(0.0)) * dx)
    coeffs[1] = nu**2 / 2.0 - drift + lam * float(w(-dx)) * dx**3
    coeffs[-1] = nu**2 / 2.0 + drift + lam * float(w(dx)) * dx**3
    return coeffs


EXAMPLES: Dict[str, SpectrumExample] = {
    "sin": SpectrumExample("sin", trigonometric_polynomial({1: 1.0}, "e^{iθ}"), SIN, 100),
    "log": SpectrumExample("log", trigonometric_polynomial({1: 0.5}, "0.5e^{iθ}"), LOG1P, 100),
    "poly": SpectrumExample(
        "poly",
        trigonometric_polynomial({1: -1.0, 0: 1.0, -1: 1.0, -2: 1.0, -3: 1.0}, "quartic"),
        QUADRATIC,
        200,
    ),
    "finance": SpectrumExample(
        "finance", trigonometric_polynomial(finance_coefficients(**FINANCE_PARAMS), "jump-diffusion"), EXP, 100
    ),
}

# Numeric aliases used by the command line.
ALIASES = {"1": "sin", "2": "log", "3": "poly", "4": "finance"}


def get_example(name: str) -> SpectrumExample:
    key = ALIASES.get(str(name), str(name))
    try:
        return EXAMPLES[key]
    except KeyError:
        raise DomainError(f"unknown spectrum example {name!r}; choose from {sorted(EXAMPLES)}") from None


def matrix_function(example: SpectrumExample, n: Optional[int] = None) -> np.ndarray:
    """Dense ``h(T_n(f))``."""
    return matrix_function_dense(example.h, example.toeplitz(n).todense())


def symmetrized_matrix(example: SpectrumExample, n: Optional[int] = None) -> np.ndarray:
    """Dense ``Y_n h(T_n(f))``, ``Y_n`` the flip matrix.

    ``h(T)`` is persymmetric, so the product is symmetric.
    """
    H = matrix_function(example, n)
    logger.debug("h(T_n(f)) for %s built at n=%d", example.name, H.shape[0])
    YH = np.real_if_close(H[::-1, :])
    return 0.5 * (YH + YH.T)


def circulant_preconditioners(example: SpectrumExample, n: Optional[int] = None) -> Dict[str, CirculantOperator]:
    """``|c(T(h∘f))|`` and ``|h(c(T(f)))|`` with ``c`` the Frobenius-optimal circulant."""
    n = example.n if n is None else n
    composed = ToeplitzOperator(fourier_coeffs_fft(example.composed, n), n)
    first = circulant_abs(optimal_frobenius_circulant(composed))
    second = circulant_abs(circulant_matfun(example.h, optimal_frobenius_circulant(example.toeplitz(n))))
    return {"|c(T(h∘f))|": first, "|h(c(T(f)))|": second}
