"""Policy iteration for the exercise boundary of the American put."""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np

from tauprec.amput.model import Boundary, PutGrid, PutParams, ValueSurface, perpetual_put_boundary
from tauprec.amput.pde import bs_solve_above_boundary, first_continuation_node
from tauprec.constants import B0_RATIO, EXERCISE_TOL, PIA_MAX_HALVINGS, PIA_MAX_ITER, PIA_TOL
from tauprec.exceptions import ConvergenceError
from tauprec.logger import get_logger

logger = get_logger(__name__)


@dataclass
class PIAIteration:
    """Diagnostics of one policy iteration.

    Args:
        iteration (int): 1-based index.
        boundary_change (float): ``‖b_{k+1} - b_k‖_∞``.
        value_change (float): ``‖U_{k+1} - U_k‖_∞``.
        min_value_increase (float): ``min(U_{k+1} - U_k)``; negative values
            are monotonicity violations.
        pasting_residual (float): ``max |V_x(b) + 1|`` for the new policy.
    """

    iteration: int
    boundary_change: float
    value_change: float
    min_value_increase: float
    pasting_residual: float


@dataclass
class PIATrace:
    iterations: List[PIAIteration] = field(default_factory=list)
    boundaries: List[np.ndarray] = field(default_factory=list)
    converged: bool = False

    def __len__(self) -> int:
        return len(self.iterations)


@dataclass
class PIAResult:
    boundary: Boundary
    surface: ValueSurface
    trace: PIATrace


def _stencil(surface: ValueSurface, i: int) -> Optional[Tuple[float, float, float, float, float, float]]:
    """Boundary price and three values with their spacings at time row ``i``.

    Returns ``(x_b, v0, v1, v2, h1, h2)`` or ``None`` when the continuation
    region is too small for the stencil.
    """
    x = surface.grid.nodes
    dx = surface.grid.dx
    row = surface.values[i]
    b = surface.boundary.values[i]
    if b <= 0:
        return 0.0, row[0], row[1], row[2], dx, dx
    s = first_continuation_node(x, b)
    h1 = x[s] - b if s < x.size else 0.0
    if h1 < 0.5 * dx:
        s += 1
        h1 += dx
    if s + 1 >= x.size:
        return None
    return b, surface.params.strike - b, row[s], row[s + 1], h1, dx


def _one_sided_derivative(v0, v1, v2, h1, h2) -> float:
    return (
        -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * v0
        + (h1 + h2) / (h1 * h2) * v1
        - h1 / (h2 * (h1 + h2)) * v2
    )


def boundary_derivative(surface: ValueSurface, i: int) -> float:
    """Second-order one-sided ``V_x`` at the boundary at time row ``i``."""
    stencil = _stencil(surface, i)
    if stencil is None:
        return float("nan")
    _, v0, v1, v2, h1, h2 = stencil
    return float(_one_sided_derivative(v0, v1, v2, h1, h2))


def smooth_pasting_residual(surface: ValueSurface) -> float:
    """``max_i |V_x(b(τ_i), τ_i) + 1|`` over the rows after expiry."""
    residuals = [
        abs(boundary_derivative(surface, i) + 1.0) for i in range(1, surface.grid.steps + 1)
    ]
    residuals = [value for value in residuals if np.isfinite(value)]
    return float(max(residuals)) if residuals else 0.0


def _second_derivative(surface: ValueSurface, i: int, b: float, v_x: float, b_tau: float) -> float:
    """``V_xx`` at the boundary from the PDE and ``V_τ = -b_τ (1 + V_x)``."""
    p = surface.params
    v_tau = -b_tau * (1.0 + v_x)
    return (v_tau + p.rate * (p.strike - b) - p.rate * b * v_x) / (0.5 * p.volatility**2 * b**2)


def quadratic_step(v_x: float, v_xx: float) -> float:
    """Shift of the boundary to the maximizer of the local quadratic model."""
    return -(1.0 + v_x) / v_xx


def _local_step(surface: ValueSurface, i: int, b_tau: float) -> Optional[float]:
    """Maximizer of the local quadratic model of ``(K - x) - V`` at the boundary."""
    b = surface.boundary.values[i]
    if b <= 0:
        return None
    v_x = boundary_derivative(surface, i)
    if not np.isfinite(v_x):
        return None
    v_xx = _second_derivative(surface, i, b, v_x, b_tau)
    if v_xx <= 0:
        return None
    return b + quadratic_step(v_x, v_xx)


def _clamp(value: float, surface: ValueSurface, i: int) -> float:
    """Keep a boundary value in ``[max(Δx, b_∞), K]``; ``b_∞`` is the perpetual exercise price."""
    strike, dx = surface.params.strike, surface.grid.dx
    if value > strike:
        logger.warning("boundary %.6g above the strike at row %d, clamped", value, i)
        return strike
    return max(value, dx, perpetual_put_boundary(surface.params))


def _grid_argmax(surface: ValueSurface, i: int) -> Tuple[float, float]:
    """Largest ``(K - x)⁺ - V`` over the continuation nodes and its smallest maximizer."""
    x = surface.grid.nodes
    row = surface.values[i]
    live = ~np.isnan(row)
    gap = surface.params.payoff(x[live]) - row[live]
    k = int(np.argmax(gap))
    return float(gap[k]), float(x[live][k])


def local_update(surface: ValueSurface) -> Boundary:
    """Apply the local quadratic update at every row, keeping ``b = K`` at expiry."""
    boundary = surface.boundary
    b_tau = np.gradient(boundary.values, boundary.taus)
    values = boundary.values.copy()
    for i in range(1, surface.grid.steps + 1):
        step = _local_step(surface, i, b_tau[i])
        if step is not None:
            values[i] = _clamp(step, surface, i)
    return Boundary(boundary.taus, values, boundary.strike)


def boundary_update(surface: ValueSurface, boundary: Optional[Boundary] = None) -> Boundary:
    """Improved policy from the value of the current one.

    Where ``(K - x)⁺ - V`` is positive at a continuation node more than one
    cell above the boundary, the new boundary is its maximizer (the smallest
    one on ties). Otherwise the boundary moves by ``-(1 + V_x)/V_xx``; a
    nonpositive ``V_xx`` falls back to the grid maximizer.

    Args:
        surface (ValueSurface): Value of the current policy.
        boundary (Optional[Boundary], optional): Current boundary. Defaults
            to ``surface.boundary``.

    Returns:
        Boundary: New boundary, ``b = K`` at expiry.
    """
    boundary = surface.boundary if boundary is None else boundary
    dx = surface.grid.dx
    b_tau = np.gradient(boundary.values, boundary.taus)
    values = boundary.values.copy()

    for i in range(1, surface.grid.steps + 1):
        b = boundary.values[i]
        if b <= 0:
            continue
        gap, x_star = _grid_argmax(surface, i)
        if gap > EXERCISE_TOL and x_star > b + dx:
            values[i] = _clamp(x_star, surface, i)
            continue
        step = _local_step(surface, i, b_tau[i])
        if step is None:
            if gap > EXERCISE_TOL:
                logger.debug("row %d: V_xx <= 0, grid maximizer %.6g used", i, x_star)
                values[i] = _clamp(x_star, surface, i)
            continue
        values[i] = _clamp(step, surface, i)

    return Boundary(boundary.taus, values, boundary.strike)


def _damped_step(
    params: PutParams,
    grid: PutGrid,
    boundary: Boundary,
    surface: ValueSurface,
    candidate: Boundary,
    floor: float,
) -> Tuple[Boundary, ValueSurface, np.ndarray]:
    """Move toward ``candidate``, halving the step while the value drops below ``floor``.

    The full step is tried first. When every one of the ``PIA_MAX_HALVINGS``
    shorter steps still loses value, the shortest is kept.
    """
    base = surface.replication()
    delta = candidate.values - boundary.values
    scale = 1.0
    for halving in range(PIA_MAX_HALVINGS + 1):
        scale = 0.5**halving
        trial = candidate if halving == 0 else Boundary(boundary.taus, boundary.values + scale * delta, boundary.strike)
        trial_surface = bs_solve_above_boundary(params, trial, grid)
        increase = trial_surface.replication() - base
        if np.min(increase) >= floor:
            if halving:
                logger.debug("PIA step damped by %g", scale)
            return trial, trial_surface, increase
    logger.debug("PIA step kept at the shortest damping %g", scale)
    return trial, trial_surface, increase


def pia(
    params: PutParams,
    grid: PutGrid,
    b0: Union[None, float, Boundary] = None,
    tol: float = PIA_TOL,
    max_iter: int = PIA_MAX_ITER,
) -> PIAResult:
    """Policy iteration: solve above the boundary, improve it, repeat.

    An improvement step that lowers the value by more than ``10 Δx²``
    anywhere is halved until it does not.

    Args:
        params (PutParams): Option data.
        grid (PutGrid): Grid.
        b0 (Union[None, float, Boundary], optional): Starting boundary, or a
            constant level. Defaults to ``0.85 K``.
        tol (float, optional): Stop when the boundary or value change is
            below this. Defaults to 1e-4.
        max_iter (int, optional): Iteration cap. Defaults to 50.

    Returns:
        PIAResult: Final boundary, its value surface and the trace.

    Raises:
        ConvergenceError: No convergence after ``max_iter`` iterations; the
            trace is attached.
    """
    if b0 is None:
        b0 = B0_RATIO * params.strike
    boundary = b0 if isinstance(b0, Boundary) else Boundary.constant(params, grid, b0)
    surface = bs_solve_above_boundary(params, boundary, grid)
    trace = PIATrace(boundaries=[boundary.values.copy()])
    floor = -10.0 * grid.dx**2

    for k in range(1, max_iter + 1):
        candidate = boundary_update(surface, boundary)
        new_boundary, new_surface, increase = _damped_step(params, grid, boundary, surface, candidate, floor)
        step = PIAIteration(
            iteration=k,
            boundary_change=new_boundary.distance(boundary),
            value_change=float(np.max(np.abs(increase))),
            min_value_increase=float(np.min(increase)),
            pasting_residual=smooth_pasting_residual(new_surface),
        )
        trace.iterations.append(step)
        trace.boundaries.append(new_boundary.values.copy())
        logger.info(
            "PIA %d: |db|=%.3e |dU|=%.3e pasting=%.3e",
            k, step.boundary_change, step.value_change, step.pasting_residual,
        )
        if step.min_value_increase < floor:
            logger.warning("PIA %d: value decreased by %.3e", k, -step.min_value_increase)
        boundary, surface = new_boundary, new_surface
        if step.boundary_change <= tol or step.value_change <= tol:
            trace.converged = True
            return PIAResult(boundary, surface, trace)

    raise ConvergenceError(f"policy iteration did not converge in {max_iter} iterations", trace=trace)


def convergence_slope(trace: PIATrace, lower: float = 0.0, upper: float = np.inf) -> float:
    """Slope of ``log e_{k+1}`` against ``log e_k``, ``e_k = ‖b_k - b_final‖_∞``.

    A pair enters the fit when ``e_k < upper`` and ``e_{k+1} > lower``, so
    ``lower = Δx`` drops the pairs whose second error is at grid resolution.
    NaN when fewer than two pairs remain.
    """
    if len(trace.boundaries) < 3:
        return float("nan")
    final = trace.boundaries[-1]
    errors = np.array([np.max(np.abs(b - final)) for b in trace.boundaries[:-1]])
    keep = (errors[:-1] > 0) & (errors[:-1] < upper) & (errors[1:] > lower)
    if np.count_nonzero(keep) < 2:
        return float("nan")
    slope, _ = np.polyfit(np.log(errors[:-1][keep]), np.log(errors[1:][keep]), 1)
    return float(slope)
