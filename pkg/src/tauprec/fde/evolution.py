"""Time stepping of the fractional diffusion problems with preconditioned GMRES."""
import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg as sla

from tauprec.constants import DENSE_CAP_1D, DENSE_CAP_2D, GMRES_TOL
from tauprec.fde.assembly import assemble_1d, assemble_2d, cn_rhs_2d, step_rhs_1d
from tauprec.fde.preconditioners import (
    PrecondChoice,
    Preconditioner,
    build_preconditioner_1d,
    build_preconditioner_2d,
)
from tauprec.fde.problems import DiffusionProblem1D, DiffusionProblem2D
from tauprec.krylov import LinearMap, SolveReport, gmres
from tauprec.logger import get_logger
from tauprec.spectra.analysis import condition_number

logger = get_logger(__name__)


@dataclass
class EvolutionResult:
    """Aggregate of one time-stepping run.

    Args:
        u (np.ndarray): State at the final time.
        choice (PrecondChoice): Preconditioner used.
        reports (List[SolveReport]): One report per time step.
        total_time (float): Seconds spent building preconditioners and solving.
        kappa (Optional[float]): Condition number of ``P⁻¹M`` at the last
            step, ``None`` above the dense cap.
        error (Optional[float]): Max-norm error against the exact solution.
        spectrum (Optional[np.ndarray]): Eigenvalues of ``P⁻¹M`` at the last
            step, when requested.
        label (str): Table label of the preconditioner.
    """

    u: np.ndarray
    choice: PrecondChoice
    reports: List[SolveReport] = field(default_factory=list)
    total_time: float = 0.0
    kappa: Optional[float] = None
    error: Optional[float] = None
    spectrum: Optional[np.ndarray] = None
    label: str = ""

    @property
    def avg_iterations(self) -> float:
        if not self.reports:
            return 0.0
        return float(np.mean([r.iterations for r in self.reports]))

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.reports)


def preconditioned_dense(A: LinearMap, P: Preconditioner) -> np.ndarray:
    """Dense ``P⁻¹ A`` built column by column."""
    dense = A.todense()
    return np.column_stack([np.real_if_close(P.solve(dense[:, j])) for j in range(A.n)])


def _diagnostics(result: EvolutionResult, A: LinearMap, P: Preconditioner, cap: int, spectrum: bool):
    if A.n > cap:
        logger.info("size %d above the dense cap %d, κ not computed", A.n, cap)
        return
    PinvM = preconditioned_dense(A, P)
    result.kappa = condition_number(PinvM)
    if spectrum:
        result.spectrum = sla.eigvals(PinvM)


def solve_evolution_1d(
    problem: DiffusionProblem1D,
    choice: PrecondChoice,
    tol: float = GMRES_TOL,
    dense_cap: int = DENSE_CAP_1D,
    compute_kappa: bool = True,
    spectrum: bool = False,
) -> EvolutionResult:
    """Implicit Euler in time, one preconditioned GMRES solve per step.

    Args:
        problem (DiffusionProblem1D): Problem.
        choice (PrecondChoice): Preconditioner.
        tol (float, optional): GMRES tolerance. Defaults to 1e-7.
        dense_cap (int, optional): Largest ``n`` for the dense κ.
        compute_kappa (bool, optional): Compute κ at the last step.
        spectrum (bool, optional): Keep the preconditioned spectrum.

    Returns:
        EvolutionResult: Final state and statistics.
    """
    choice = PrecondChoice(choice)
    u = np.asarray(problem.initial(problem.nodes), dtype=float)
    result = EvolutionResult(u=u, choice=choice)
    P = None
    A = None

    started = time.perf_counter()
    for m in range(1, problem.steps + 1):
        A = assemble_1d(problem, m)
        if P is None or problem.time_dependent:
            P = build_preconditioner_1d(problem, m, choice)
        b = step_rhs_1d(problem, m, u)
        u, report = gmres(A, b, P.solve, tol=tol)
        result.reports.append(report)
    result.total_time = time.perf_counter() - started
    result.u = u
    result.label = P.label if P is not None else ""

    if problem.exact is not None:
        result.error = float(np.max(np.abs(u - problem.exact(problem.nodes, problem.horizon))))
    if compute_kappa and A is not None:
        _diagnostics(result, A, P, dense_cap, spectrum)
    logger.info(
        "%s with %s: %.2f iterations per step, %.3f s",
        problem.name, choice.value, result.avg_iterations, result.total_time,
    )
    return result


def solve_evolution_2d(
    problem: DiffusionProblem2D,
    choice: PrecondChoice,
    tol: float = GMRES_TOL,
    dense_cap: int = DENSE_CAP_2D,
    compute_kappa: bool = True,
    spectrum: bool = False,
) -> EvolutionResult:
    """Crank–Nicolson in time, one preconditioned GMRES solve per step."""
    choice = PrecondChoice(choice)
    X, Y = problem.mesh
    u = np.asarray(problem.initial(X, Y), dtype=float).ravel()
    result = EvolutionResult(u=u, choice=choice)
    P = None
    A = None

    started = time.perf_counter()
    for m in range(1, problem.steps + 1):
        A = assemble_2d(problem, m)
        if P is None or problem.time_dependent:
            P = build_preconditioner_2d(problem, choice, m)
        b = cn_rhs_2d(problem, m, u)
        u, report = gmres(A, b, P.solve, tol=tol)
        result.reports.append(report)
    result.total_time = time.perf_counter() - started
    result.u = u
    result.label = P.label if P is not None else ""

    if problem.exact is not None:
        exact = np.asarray(problem.exact(X, Y, problem.horizon)).ravel()
        result.error = float(np.max(np.abs(u - exact)))
    if compute_kappa and A is not None:
        _diagnostics(result, A, P, dense_cap, spectrum)
    logger.info(
        "%s with %s: %.2f iterations per step, %.3f s",
        problem.name, choice.value, result.avg_iterations, result.total_time,
    )
    return result
