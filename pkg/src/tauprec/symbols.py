"""Generating symbols of the fractional and spectral examples and their sampling grids."""
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np
from scipy.special import binom

from tauprec.exceptions import DomainError
from tauprec.toeplitz_core import AnalyticFunction, FourierSymbol, _check_order

GRID_KINDS = ("tau", "circulant", "uniform2pi")


@dataclass(frozen=True)
class SymbolGrid:
    """Sampling nodes of a symbol.

    ``tau``: ``jπ/(n+1)``, ``j = 1..n``; ``circulant``: ``2πj/n``,
    ``j = 0..n-1``; ``uniform2pi``: ``n`` equispaced nodes from ``-2π`` to
    ``2π``, both ends included.
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in GRID_KINDS:
            raise DomainError(f"unknown grid kind {self.kind!r}")
        if self.n < 1:
            raise DomainError(f"grid size must be positive, got {self.n}")

    @property
    def nodes(self) -> np.ndarray:
        j = np.arange(self.n, dtype=float)
        if self.kind == "tau":
            return (j + 1.0) * np.pi / (self.n + 1)
        if self.kind == "circulant":
            return 2.0 * np.pi * j / self.n
        return np.linspace(-2.0 * np.pi, 2.0 * np.pi, self.n)


def _fractional_power(theta: np.ndarray, alpha: float) -> np.ndarray:
    """Principal branch of ``(1 - e^{iθ})^α`` with the value 0 at the zero."""
    base = 1.0 - np.exp(1j * theta)
    out = np.zeros_like(base)
    nonzero = base != 0
    out[nonzero] = base[nonzero] ** alpha
    return out


def _signed_binom(alpha: float, j: np.ndarray) -> np.ndarray:
    """``(-1)^j binom(α, j)`` with zeros for negative ``j``."""
    j = np.asarray(j)
    safe = np.maximum(j, 0)
    values = np.where(safe % 2 == 0, 1.0, -1.0) * binom(alpha, safe)
    return np.where(j >= 0, values, 0.0)


def _g_rule(alpha: float) -> Callable[[np.ndarray], np.ndarray]:
    return lambda k: -_signed_binom(alpha, np.asarray(k) + 1)


def _w_rule(alpha: float) -> Callable[[np.ndarray], np.ndarray]:
    def rule(k):
        j = np.asarray(k) + 1
        w = 0.5 * alpha * _signed_binom(alpha, j)
        w = w + 0.5 * (2.0 - alpha) * _signed_binom(alpha, j - 1)
        return -w

    return rule


def _real_part_rule(rule: Callable) -> Callable[[np.ndarray], np.ndarray]:
    """Coefficients of ``f + conj(f)`` for a symbol with real coefficients."""
    return lambda k: rule(np.asarray(k)) + rule(-np.asarray(k))


def g_alpha(alpha: float) -> FourierSymbol:
    """Symbol ``g_α(θ) = -e^{-iθ}(1 - e^{iθ})^α`` of ``T_{α,n}``."""
    _check_order(alpha)
    return FourierSymbol(
        func=lambda t: -np.exp(-1j * t) * _fractional_power(t, alpha),
        name=f"g_{alpha:g}",
        coeff_rule=_g_rule(alpha),
    )


def p_alpha(alpha: float) -> FourierSymbol:
    """``p_α = g_α + conj(g_α)``, real, even and vanishing at 0 with order α."""
    g = g_alpha(alpha)
    return FourierSymbol(
        func=lambda t: 2.0 * np.real(g(t)),
        name=f"p_{alpha:g}",
        real=True,
        coeff_rule=_real_part_rule(g.coeff_rule),
    )


def w_alpha(alpha: float) -> FourierSymbol:
    """Symbol of the second-order matrix ``S_{α,n}``."""
    _check_order(alpha)
    return FourierSymbol(
        func=lambda t: -0.5
        * (2.0 - alpha + alpha * np.exp(-1j * t))
        * _fractional_power(t, alpha),
        name=f"w_{alpha:g}",
        coeff_rule=_w_rule(alpha),
    )


def q_alpha(alpha: float) -> FourierSymbol:
    """``q_α = w_α + conj(w_α)``."""
    w = w_alpha(alpha)
    return FourierSymbol(
        func=lambda t: 2.0 * np.real(w(t)),
        name=f"q_{alpha:g}",
        real=True,
        coeff_rule=_real_part_rule(w.coeff_rule),
    )


def psi_symmetrized(g: FourierSymbol) -> FourierSymbol:
    """Odd extension to ``[-2π, 2π]``: ``g(θ)`` for ``θ ≥ 0``, ``-g(θ + 2π)`` below."""

    def psi(theta):
        theta = np.asarray(theta, dtype=float)
        upper = np.asarray(g(np.where(theta >= 0, theta, 0.0)))
        lower = np.asarray(g(np.where(theta < 0, theta + 2.0 * np.pi, 0.0)))
        return np.where(theta >= 0, upper, -lower)

    return FourierSymbol(
        func=psi,
        name=f"psi[{g.name}]",
        domain=(-2.0 * np.pi, 2.0 * np.pi),
        real=g.real,
        periodic=False,
    )


def modulus(f: FourierSymbol) -> FourierSymbol:
    """``|f|``."""
    return FourierSymbol(
        func=lambda t: np.abs(f(t)), name=f"|{f.name}|", domain=f.domain,
        real=True, periodic=f.periodic,
    )


def compose(h: AnalyticFunction, f: FourierSymbol) -> FourierSymbol:
    """``h ∘ f``."""
    return FourierSymbol(
        func=lambda t: h(f(t)), name=f"{h.name}({f.name})", domain=f.domain,
        periodic=f.periodic,
    )


def trigonometric_polynomial(
    coeffs: Dict[int, complex], name: str = "f"
) -> FourierSymbol:
    """``Σ a_k e^{ikθ}`` from a ``{k: a_k}`` mapping."""
    items = {int(k): complex(v) for k, v in coeffs.items()}
    real_coeffs = all(v.imag == 0 for v in items.values())
    hermitian = real_coeffs and all(
        items.get(-k, 0.0) == v for k, v in items.items()
    )

    def func(theta):
        theta = np.asarray(theta, dtype=float)
        return sum(v * np.exp(1j * k * theta) for k, v in items.items())

    def rule(k):
        k = np.asarray(k)
        return np.array([items.get(int(j), 0.0) for j in k.ravel()]).reshape(k.shape)

    return FourierSymbol(func=func, name=name, real=hermitian, coeff_rule=rule)


def constant(value: float, name: Optional[str] = None) -> FourierSymbol:
    """Constant symbol."""
    return trigonometric_polynomial({0: value}, name=name or f"{value:g}")


def sample_symbol(s: FourierSymbol, grid: SymbolGrid) -> np.ndarray:
    """Evaluate ``s`` on ``grid`` in grid order.

    Raises:
        DomainError: The grid leaves the domain of a non periodic symbol.
    """
    return s(grid.nodes)


def fde_symbol_1d(
    alpha: float, d_plus: Callable, d_minus: Callable
) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Space-frequency symbol ``d₊(x) g_α(θ) + d₋(x) g_α(-θ)`` of the 1D operator.

    Used by diagnostics only; ``x`` and ``θ`` broadcast against each other.
    """
    g = g_alpha(alpha)

    def symbol(x, theta):
        x = np.asarray(x, dtype=float)
        theta = np.asarray(theta, dtype=float)
        return d_plus(x) * g(theta) + d_minus(x) * g(-theta)

    return symbol


def fde_symbol_2d(
    alpha: float,
    beta: float,
    d_plus: Callable,
    d_minus: Callable,
    e_plus: Callable,
    e_minus: Callable,
    ratio: float,
) -> Callable[..., np.ndarray]:
    """Symbol of the 2D Crank–Nicolson operator without the identity shift.

    ``ratio`` is ``s/r``; the result is
    ``d₊ w_α(θ₁) + d₋ w_α(-θ₁) + ratio (e₊ w_β(θ₂) + e₋ w_β(-θ₂))``.
    """
    wa, wb = w_alpha(alpha), w_alpha(beta)

    def symbol(x, y, theta1, theta2):
        t1 = np.asarray(theta1, dtype=float)
        t2 = np.asarray(theta2, dtype=float)
        xs = d_plus(x, y) * wa(t1) + d_minus(x, y) * wa(-t1)
        ys = e_plus(x, y) * wb(t2) + e_minus(x, y) * wb(-t2)
        return xs + ratio * ys

    return symbol
