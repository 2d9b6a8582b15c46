"""Implicit Euler Black–Scholes solve in the continuation region of a given policy."""
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import solve_banded

from tauprec.amput.model import Boundary, PutGrid, PutParams, ValueSurface
from tauprec.exceptions import DomainError, ShapeError
from tauprec.logger import get_logger

logger = get_logger(__name__)

# Nodes closer than this to the boundary are treated as lying on it.
ON_BOUNDARY = 1e-12


def first_continuation_node(x: np.ndarray, b: float) -> int:
    """Index of the first node strictly above the boundary price ``b``."""
    return int(np.searchsorted(x, b + ON_BOUNDARY, side="right"))


def implicit_euler_rows(x: np.ndarray, params: PutParams, dx: float, dt: float) -> Tuple[np.ndarray, ...]:
    """Lower, main and upper coefficients of the regular implicit Euler rows."""
    diffusion = 0.5 * params.volatility**2 * x**2 / dx**2
    drift = params.rate * x / (2.0 * dx)
    a = diffusion - drift
    c = diffusion + drift
    return -dt * a, 1.0 + dt * (a + c + params.rate), -dt * c


def _step(
    x: np.ndarray,
    v_old: np.ndarray,
    b: float,
    params: PutParams,
    grid: PutGrid,
) -> np.ndarray:
    """One backward step; returns the full row with NaN below the boundary."""
    dx, dt, r = grid.dx, grid.dt, params.rate
    row = np.full(x.size, np.nan)
    if b > 0:
        start = first_continuation_node(x, b)
        row[:start][x[:start] >= b - ON_BOUNDARY] = params.strike - b
    else:
        start = 0
    if start >= x.size:
        return row

    xs = x[start:]
    sub, diag, sup = implicit_euler_rows(xs, params, dx, dt)
    rhs = v_old[start:].copy()

    if b > 0:
        h_l, h_r = xs[0] - b, dx
        den = h_l * h_r * (h_l + h_r)
        sig2 = params.volatility**2 * xs[0] ** 2
        c_left = (-r * xs[0] * h_r**2 + sig2 * h_r) / den
        c_mid = (r * xs[0] * (h_r**2 - h_l**2) - sig2 * (h_l + h_r)) / den - r
        c_right = (r * xs[0] * h_l**2 + sig2 * h_l) / den
        diag[0] = 1.0 - dt * c_mid
        sup[0] = -dt * c_right
        sub[0] = 0.0
        rhs[0] += dt * c_left * (params.strike - b)
    else:
        # x = 0: the equation reduces to V_τ = -rV.
        diag[0], sup[0], sub[0] = 1.0 + r * dt, 0.0, 0.0

    # Far field: both derivatives vanish.
    diag[-1], sub[-1], sup[-1] = 1.0 + r * dt, 0.0, 0.0

    bands = np.zeros((3, xs.size))
    bands[0, 1:] = sup[:-1]
    bands[1] = diag
    bands[2, :-1] = sub[1:]
    row[start:] = solve_banded((1, 1), bands, rhs)
    return row


def bs_solve_above_boundary(
    params: PutParams,
    boundary: Boundary,
    grid: PutGrid,
    terminal: Optional[np.ndarray] = None,
) -> ValueSurface:
    """Value of the policy that exercises at ``boundary``.

    Solves ``V_τ = rxV_x + ½σ²x²V_xx - rV`` for ``x > b(τ)`` with
    ``V = K - b`` on the boundary, zero derivatives at ``x_max`` and one
    tridiagonal solve per step. The node next to the boundary uses
    three-point stencils on the nonuniform spacing.

    Args:
        params (PutParams): Option data.
        boundary (Boundary): Exercise boundary on ``grid.taus``.
        grid (PutGrid): Grid.
        terminal (Optional[np.ndarray], optional): Value at expiry above the
            boundary. Defaults to zero.

    Returns:
        ValueSurface: Values, NaN in the stopping region.

    Raises:
        DomainError: The boundary exceeds the strike.
    """
    if boundary.values.size != grid.steps + 1:
        raise ShapeError(f"boundary has {boundary.values.size} values, grid has {grid.steps + 1} times")
    if np.any(boundary.values > params.strike * (1 + 1e-12)):
        raise DomainError("boundary above the strike")
    if grid.dt > grid.dx**2 * (1 + 1e-9):
        logger.warning("time step %.3g exceeds dx² = %.3g; accuracy degrades", grid.dt, grid.dx**2)

    x = grid.nodes
    values = np.empty((grid.steps + 1, x.size))
    b0 = boundary.values[0]
    first = np.zeros(x.size) if terminal is None else np.asarray(terminal, dtype=float)
    if first.shape != x.shape:
        raise ShapeError(f"terminal values of shape {first.shape}, grid has {x.size} nodes")
    values[0] = np.where(x >= b0 - ON_BOUNDARY, first, np.nan)
    if b0 > 0:
        values[0, np.abs(x - b0) <= ON_BOUNDARY] = params.strike - b0

    payoff = params.payoff(x)
    for i in range(1, grid.steps + 1):
        v_old = np.where(np.isnan(values[i - 1]), payoff, values[i - 1])
        values[i] = _step(x, v_old, boundary.values[i], params, grid)

    logger.debug("policy value solved on %d x %d nodes", grid.steps + 1, x.size)
    return ValueSurface(params=params, grid=grid, boundary=boundary, values=values)
