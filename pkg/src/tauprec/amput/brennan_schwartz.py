"""Brennan–Schwartz projected sweep and its policy-iteration adjustment."""
from dataclasses import dataclass

import numpy as np

from tauprec.amput.model import Boundary, PutGrid, PutParams, ValueSurface
from tauprec.amput.pde import implicit_euler_rows, bs_solve_above_boundary
from tauprec.amput.pia import local_update
from tauprec.logger import get_logger

logger = get_logger(__name__)


@dataclass
class BrennanSchwartzResult:
    """Boundaries of the projected sweep.

    Args:
        adjusted (Boundary): After one solve above the boundary and a local update.
        unadjusted (Boundary): Edge of the projected exercise region.
        values (np.ndarray): Projected values on the full grid.
        surface (ValueSurface): Value of the unadjusted policy.
    """

    adjusted: Boundary
    unadjusted: Boundary
    values: np.ndarray
    surface: ValueSurface


def _projected_solve(sub, diag, sup, rhs, payoff) -> np.ndarray:
    """Eliminate from the top of the grid, then substitute upward with ``max(payoff, ·)``."""
    n = diag.size
    d = diag.astype(float).copy()
    y = rhs.astype(float).copy()
    for j in range(n - 2, -1, -1):
        factor = sup[j] / d[j + 1]
        d[j] -= factor * sub[j + 1]
        y[j] -= factor * y[j + 1]

    v = np.empty(n)
    v[0] = max(payoff[0], y[0] / d[0])
    for j in range(1, n):
        v[j] = max(payoff[j], (y[j] - sub[j] * v[j - 1]) / d[j])
    return v


def _exercise_edge(x: np.ndarray, values: np.ndarray, payoff: np.ndarray) -> float:
    """Largest node of the projected exercise region below the first continuation node."""
    exercised = (values <= payoff) & (payoff > 0)
    if not exercised[0]:
        return 0.0
    above = np.flatnonzero(~exercised)
    last = (above[0] - 1) if above.size else x.size - 1
    return float(x[last])


def brennan_schwartz(params: PutParams, grid: PutGrid) -> BrennanSchwartzResult:
    """Projected implicit Euler sweep, then one policy-iteration adjustment.

    Args:
        params (PutParams): Option data.
        grid (PutGrid): Grid.

    Returns:
        BrennanSchwartzResult: Adjusted and unadjusted boundaries.
    """
    x = grid.nodes
    payoff = params.payoff(x)
    sub, diag, sup = implicit_euler_rows(x, params, grid.dx, grid.dt)
    diag[0], sup[0], sub[0] = 1.0 + params.rate * grid.dt, 0.0, 0.0
    diag[-1], sub[-1], sup[-1] = 1.0 + params.rate * grid.dt, 0.0, 0.0

    values = np.empty((grid.steps + 1, x.size))
    values[0] = payoff
    edges = np.empty(grid.steps + 1)
    edges[0] = params.strike
    for i in range(1, grid.steps + 1):
        values[i] = _projected_solve(sub, diag, sup, values[i - 1], payoff)
        edges[i] = min(_exercise_edge(x, values[i], payoff), params.strike)

    unadjusted = Boundary(grid.taus, edges, params.strike)
    surface = bs_solve_above_boundary(params, unadjusted, grid)
    adjusted = local_update(surface)
    logger.info(
        "Brennan-Schwartz: largest adjustment %.4g", adjusted.distance(unadjusted)
    )
    return BrennanSchwartzResult(adjusted, unadjusted, values, surface)
