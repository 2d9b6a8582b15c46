"""Parameters, grids, boundaries and value surfaces of the American put."""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from scipy.stats import norm

from tauprec.constants import X_MAX_FACTOR
from tauprec.exceptions import DomainError, ShapeError


@dataclass(frozen=True)
class PutParams:
    """Black–Scholes put data.

    Args:
        rate (float): Risk-free rate per year.
        volatility (float): Volatility per square-root year.
        strike (float): Strike price.
        horizon (float): Time to expiry in years.
    """

    rate: float = 0.1
    volatility: float = 0.3
    strike: float = 100.0
    horizon: float = 1.0

    def __post_init__(self):
        for name in ("rate", "volatility", "strike", "horizon"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")

    def payoff(self, x) -> np.ndarray:
        return np.maximum(self.strike - np.asarray(x, dtype=float), 0.0)


@dataclass(frozen=True)
class PutGrid:
    """Uniform grid in asset price and time to expiry.

    Args:
        dx (float): Asset step.
        dt (float): Time step.
        x_max (float): Truncation price, a multiple of ``dx``.
        steps (int): Number of time steps.
    """

    dx: float
    dt: float
    x_max: float
    steps: int

    def __post_init__(self):
        if self.dx <= 0 or self.dt <= 0:
            raise DomainError("grid steps must be positive")
        if self.x_max < 3 * self.dx:
            raise DomainError(f"x_max={self.x_max} leaves fewer than three cells")
        if self.steps < 1:
            raise DomainError("at least one time step is needed")

    @classmethod
    def build(
        cls,
        params: PutParams,
        dx: float,
        dt: Optional[float] = None,
        x_max_factor: float = X_MAX_FACTOR,
    ) -> "PutGrid":
        """Grid for ``params``; ``dt`` defaults to ``dx²`` and ``x_max`` to ``3K``."""
        if x_max_factor < X_MAX_FACTOR:
            raise DomainError(f"x_max must be at least {X_MAX_FACTOR:g}K")
        dt = dx**2 if dt is None else dt
        steps = max(1, int(round(params.horizon / dt)))
        cells = int(np.ceil(x_max_factor * params.strike / dx - 1e-9))
        return cls(dx=dx, dt=params.horizon / steps, x_max=cells * dx, steps=steps)

    @property
    def size(self) -> int:
        """Number of asset nodes, ``x_0 = 0`` to ``x_J = x_max``."""
        return int(round(self.x_max / self.dx)) + 1

    @property
    def nodes(self) -> np.ndarray:
        return self.dx * np.arange(self.size)

    @property
    def taus(self) -> np.ndarray:
        return self.dt * np.arange(self.steps + 1)


@dataclass
class Boundary:
    """Exercise boundary sampled at the times to expiry of a grid.

    A value of 0 means the option is never exercised at that time.

    Args:
        taus (np.ndarray): Times to expiry, ascending from 0.
        values (np.ndarray): Boundary prices.
        strike (float): Upper bound of the values.
    """

    taus: np.ndarray
    values: np.ndarray
    strike: float

    def __post_init__(self):
        self.taus = np.asarray(self.taus, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.taus.shape != self.values.shape:
            raise ShapeError(f"{self.taus.size} times against {self.values.size} boundary values")
        if np.any(self.values < 0) or np.any(self.values > self.strike * (1 + 1e-12)):
            raise DomainError(f"boundary must stay in [0, {self.strike:g}]")

    @classmethod
    def constant(cls, params: PutParams, grid: PutGrid, level: float) -> "Boundary":
        """``level`` everywhere except ``b = K`` at expiry."""
        values = np.full(grid.steps + 1, float(level))
        values[0] = params.strike
        return cls(grid.taus, values, params.strike)

    @classmethod
    def never(cls, params: PutParams, grid: PutGrid) -> "Boundary":
        return cls(grid.taus, np.zeros(grid.steps + 1), params.strike)

    def at(self, tau) -> np.ndarray:
        """Piecewise-linear boundary at times to expiry ``tau``."""
        return np.interp(tau, self.taus, self.values)

    def distance(self, other: "Boundary") -> float:
        return float(np.max(np.abs(self.values - other.values)))


@dataclass
class ValueSurface:
    """Value of the put under an exercise policy.

    ``values[i, j]`` is ``V(x_j, τ_i)`` in the continuation region and NaN
    below the boundary.
    """

    params: PutParams
    grid: PutGrid
    boundary: Boundary
    values: np.ndarray
    _interpolator: Optional[RegularGridInterpolator] = field(default=None, init=False, repr=False)

    def replication(self) -> np.ndarray:
        """``U``: ``V`` above the boundary and the payoff below it."""
        payoff = self.params.payoff(self.grid.nodes)
        return np.where(np.isnan(self.values), payoff[None, :], self.values)

    def value_at(self, x, tau) -> np.ndarray:
        """Bilinear interpolation of :meth:`replication`."""
        if self._interpolator is None:
            self._interpolator = RegularGridInterpolator(
                (self.grid.taus, self.grid.nodes), self.replication()
            )
        x, tau = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(tau, dtype=float))
        points = np.stack([tau.ravel(), x.ravel()], axis=-1)
        return self._interpolator(points).reshape(x.shape)

    def boundary_at(self, tau) -> np.ndarray:
        return self.boundary.at(tau)


def european_put(params: PutParams, x, tau) -> np.ndarray:
    """Black–Scholes price of the European put with time to expiry ``tau``."""
    x = np.asarray(x, dtype=float)
    tau = np.asarray(tau, dtype=float)
    K, r, sigma = params.strike, params.rate, params.volatility
    discount = K * np.exp(-r * tau)
    with np.errstate(divide="ignore", invalid="ignore"):
        vol = sigma * np.sqrt(tau)
        d1 = (np.log(x / K) + (r + 0.5 * sigma**2) * tau) / vol
        d2 = d1 - vol
        price = discount * norm.cdf(-d2) - x * norm.cdf(-d1)
    price = np.where(x <= 0, discount, price)
    return np.where(tau <= 0, params.payoff(x), price)


def perpetual_put_boundary(params: PutParams) -> float:
    """Exercise price of the perpetual put, ``Kφ/(φ-1)``.

    ``φ`` is the negative root of ``½σ²φ² + (r - ½σ²)φ - r = 0``.
    """
    r, sigma = params.rate, params.volatility
    half = 0.5 * sigma**2
    phi = (half - r - np.sqrt((r - half) ** 2 + 2.0 * r * sigma**2)) / sigma**2
    return float(params.strike * phi / (phi - 1.0))
