"""Fractional diffusion problem descriptions and the bench examples."""
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.special import gamma

from tauprec.exceptions import DomainError
from tauprec.toeplitz_core import _check_order

Coefficient1D = Callable[[np.ndarray, float], np.ndarray]
Coefficient2D = Callable[[np.ndarray, np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class DiffusionProblem1D:
    """One-dimensional two-sided fractional diffusion problem.

    ``u_t = d₊ ∂₊^α u + d₋ ∂₋^α u + f`` on ``(left, right) × (0, horizon]``
    with zero exterior data, discretized on ``n`` interior nodes and
    ``steps`` implicit Euler steps.
    """

    alpha: float
    d_plus: Coefficient1D = field(repr=False)
    d_minus: Coefficient1D = field(repr=False)
    source: Coefficient1D = field(repr=False)
    initial: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    n: int = 63
    steps: int = 32
    left: float = 0.0
    right: float = 2.0
    horizon: float = 1.0
    exact: Optional[Coefficient1D] = field(default=None, repr=False)
    time_dependent: bool = False
    name: str = "fde1d"

    def __post_init__(self):
        _check_order(self.alpha)
        if self.right <= self.left:
            raise DomainError(f"empty interval [{self.left}, {self.right}]")
        if self.horizon <= 0:
            raise DomainError(f"horizon must be positive, got {self.horizon}")
        if self.n < 1 or self.steps < 1:
            raise DomainError("n and steps must be positive")
        x = self.nodes
        for label, coeff in (("d_plus", self.d_plus), ("d_minus", self.d_minus)):
            if np.any(np.asarray(coeff(x, 0.0)) < 0):
                raise DomainError(f"{label} is negative on the grid")

    @property
    def h(self) -> float:
        return (self.right - self.left) / (self.n + 1)

    @property
    def dt(self) -> float:
        return self.horizon / self.steps

    @property
    def nu(self) -> float:
        return self.h**self.alpha / self.dt

    @property
    def nodes(self) -> np.ndarray:
        return self.left + self.h * np.arange(1, self.n + 1)

    def time(self, m: float) -> float:
        return m * self.dt

    def coefficients(self, t: float) -> Tuple[np.ndarray, np.ndarray]:
        x = self.nodes
        return (
            np.broadcast_to(np.asarray(self.d_plus(x, t), dtype=float), x.shape).copy(),
            np.broadcast_to(np.asarray(self.d_minus(x, t), dtype=float), x.shape).copy(),
        )


@dataclass(frozen=True)
class DiffusionProblem2D:
    """Two-dimensional fractional diffusion problem solved by Crank–Nicolson.

    Unknowns are ordered with the x index fastest: ``u[i + n1 j]`` sits at
    ``(x_i, y_j)``.
    """

    alpha: float
    beta: float
    d_plus: Coefficient2D = field(repr=False)
    d_minus: Coefficient2D = field(repr=False)
    e_plus: Coefficient2D = field(repr=False)
    e_minus: Coefficient2D = field(repr=False)
    source: Coefficient2D = field(repr=False)
    initial: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)
    n1: int = 16
    n2: int = 16
    steps: int = 16
    x_range: Tuple[float, float] = (0.0, 2.0)
    y_range: Tuple[float, float] = (0.0, 2.0)
    horizon: float = 1.0
    exact: Optional[Coefficient2D] = field(default=None, repr=False)
    time_dependent: bool = False
    name: str = "fde2d"

    def __post_init__(self):
        _check_order(self.alpha)
        _check_order(self.beta)
        if self.x_range[1] <= self.x_range[0] or self.y_range[1] <= self.y_range[0]:
            raise DomainError("empty rectangle")
        if self.horizon <= 0 or self.n1 < 1 or self.n2 < 1 or self.steps < 1:
            raise DomainError("sizes and horizon must be positive")
        X, Y = self.mesh
        for label in ("d_plus", "d_minus", "e_plus", "e_minus"):
            if np.any(np.asarray(getattr(self, label)(X, Y, 0.0)) < 0):
                raise DomainError(f"{label} is negative on the grid")

    @property
    def N(self) -> int:
        return self.n1 * self.n2

    @property
    def hx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / (self.n1 + 1)

    @property
    def hy(self) -> float:
        return (self.y_range[1] - self.y_range[0]) / (self.n2 + 1)

    @property
    def ht(self) -> float:
        return self.horizon / self.steps

    @property
    def r(self) -> float:
        return self.ht / (2.0 * self.hx**self.alpha)

    @property
    def s(self) -> float:
        return self.ht / (2.0 * self.hy**self.beta)

    @property
    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        x = self.x_range[0] + self.hx * np.arange(1, self.n1 + 1)
        y = self.y_range[0] + self.hy * np.arange(1, self.n2 + 1)
        return np.meshgrid(x, y)

    def time(self, m: float) -> float:
        return m * self.ht

    def coefficients(self, t: float) -> Tuple[np.ndarray, ...]:
        X, Y = self.mesh
        return tuple(
            np.broadcast_to(np.asarray(c(X, Y, t), dtype=float), X.shape).ravel().copy()
            for c in (self.d_plus, self.d_minus, self.e_plus, self.e_minus)
        )


def example_1d(alpha: float, n: int) -> DiffusionProblem1D:
    """Variable-coefficient bench problem on ``[0, 2] × [0, 1]`` with ``h_t = h_x``.

    Exact solution ``4 e^{-t} x² (2-x)²``; ``(n + 1) / 2`` time steps.
    """
    c = gamma(3.0 - alpha)

    def source(x, t):
        y = 2.0 - x
        bracket = (
            x**2
            + y**2 * (8.0 + x**2) / 8.0
            - 3.0 * (x**3 + y**3) / (3.0 - alpha)
            + 3.0 * (x**4 + y**4) / ((4.0 - alpha) * (3.0 - alpha))
        )
        return -32.0 * np.exp(-t) * bracket

    return DiffusionProblem1D(
        alpha=alpha,
        d_plus=lambda x, t: c * x**alpha,
        d_minus=lambda x, t: c * (2.0 - x) ** alpha,
        source=source,
        initial=lambda x: 4.0 * x**2 * (2.0 - x) ** 2,
        exact=lambda x, t: 4.0 * np.exp(-t) * x**2 * (2.0 - x) ** 2,
        n=n,
        steps=max(1, (n + 1) // 2),
        name=f"example1(alpha={alpha:g})",
    )


def _f_gamma(x, y, g):
    radial = 8.0 * x ** (2.0 - g) - 24.0 * x ** (3.0 - g) / (3.0 - g) \
        + 24.0 * x ** (4.0 - g) / ((4.0 - g) * (3.0 - g))
    return radial * (1.0 + x) ** g * (1.0 + y) ** 2 * y**2 * (2.0 - y) ** 2


def example_2d(alpha: float = 1.8, beta: float = 1.6, n: int = 16) -> DiffusionProblem2D:
    """Variable-coefficient bench problem on ``[0, 2]² × [0, 1]``.

    ``n1 = n2 = M = n``; exact solution ``16 e^{-t} x²(2-x)² y²(2-y)²``.
    With ``beta=1.2`` this is the low-order variant of the same problem.
    """
    ca, cb = gamma(3.0 - alpha), gamma(3.0 - beta)

    def bump(X, Y):
        return X**2 * (2.0 - X) ** 2 * Y**2 * (2.0 - Y) ** 2

    def source(X, Y, t):
        total = (
            bump(X, Y)
            + _f_gamma(X, Y, alpha)
            + _f_gamma(2.0 - X, 2.0 - Y, alpha)
            + _f_gamma(Y, X, beta)
            + _f_gamma(2.0 - Y, 2.0 - X, beta)
        )
        return -16.0 * np.exp(-t) * total

    return DiffusionProblem2D(
        alpha=alpha,
        beta=beta,
        d_plus=lambda X, Y, t: ca * (1.0 + X) ** alpha * (1.0 + Y) ** 2,
        d_minus=lambda X, Y, t: ca * (3.0 - X) ** alpha * (3.0 - Y) ** 2,
        e_plus=lambda X, Y, t: cb * (1.0 + X) ** 2 * (1.0 + Y) ** beta,
        e_minus=lambda X, Y, t: cb * (3.0 - X) ** 2 * (3.0 - Y) ** beta,
        source=source,
        initial=lambda X, Y: 16.0 * bump(X, Y),
        exact=lambda X, Y, t: 16.0 * np.exp(-t) * bump(X, Y),
        n1=n,
        n2=n,
        steps=n,
        name=f"example2(alpha={alpha:g}, beta={beta:g})",
    )


def constant_problem_1d(alpha: float, n: int, d: float = 1.0, steps: int = 1) -> DiffusionProblem1D:
    """Constant coefficients ``d₊ = d₋ = d`` and no source."""
    return DiffusionProblem1D(
        alpha=alpha,
        d_plus=lambda x, t: np.full_like(x, d),
        d_minus=lambda x, t: np.full_like(x, d),
        source=lambda x, t: np.zeros_like(x),
        initial=lambda x: np.zeros_like(x),
        n=n,
        steps=steps,
        name=f"constant1d(alpha={alpha:g}, d={d:g})",
    )


def constant_problem_2d(
    alpha: float, beta: float, n: int, d: float = 1.0, e: float = 1.0, steps: Optional[int] = None
) -> DiffusionProblem2D:
    """Constant coefficients ``d₊ = d₋ = d``, ``e₊ = e₋ = e`` on ``[0, 2]²``."""
    return DiffusionProblem2D(
        alpha=alpha,
        beta=beta,
        d_plus=lambda X, Y, t: np.full_like(X, d),
        d_minus=lambda X, Y, t: np.full_like(X, d),
        e_plus=lambda X, Y, t: np.full_like(X, e),
        e_minus=lambda X, Y, t: np.full_like(X, e),
        source=lambda X, Y, t: np.zeros_like(X),
        initial=lambda X, Y: np.zeros_like(X),
        n1=n,
        n2=n,
        steps=n if steps is None else steps,
        name=f"constant2d(alpha={alpha:g}, beta={beta:g})",
    )
