"""Matrix-free GMRES and MINRES with left preconditioning."""
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.linalg import solve_triangular
from scipy.sparse.linalg import LinearOperator

from tauprec.constants import GMRES_TOL, MINRES_TOL
from tauprec.exceptions import DefinitenessError, ShapeError
from tauprec.logger import get_logger

logger = get_logger(__name__)

Preconditioner = Callable[[np.ndarray], np.ndarray]


@dataclass
class LinearMap:
    """Square operator known through its action.

    Args:
        n (int): Size.
        apply (Callable): ``x -> A x``.
        symmetric (bool): Declared symmetry.
        positive_definite (bool): Declared definiteness.
        dense (Optional[Callable]): Materializes the matrix, when cheaper
            than probing.
        diagonal (Optional[Callable[[int], np.ndarray]]): Band extractor,
            ``diagonal(k)`` returns the entries ``A[i, i + k]``.
    """

    n: int
    apply: Callable[[np.ndarray], np.ndarray]
    symmetric: bool = False
    positive_definite: bool = False
    dense: Optional[Callable[[], np.ndarray]] = field(default=None, repr=False)
    diagonal: Optional[Callable[[int], np.ndarray]] = field(default=None, repr=False)

    def __call__(self, x) -> np.ndarray:
        return self.apply(x)

    @classmethod
    def from_matrix(cls, A, symmetric: Optional[bool] = None) -> "LinearMap":
        A = np.asarray(A)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ShapeError(f"square matrix expected, got {A.shape}")
        if symmetric is None:
            symmetric = bool(np.allclose(A, A.conj().T))
        return cls(
            n=A.shape[0],
            apply=lambda x: A @ x,
            symmetric=symmetric,
            dense=lambda: A,
            diagonal=lambda k: np.diagonal(A, k).copy(),
        )

    def todense(self) -> np.ndarray:
        if self.dense is not None:
            return np.asarray(self.dense())
        return np.column_stack([self.apply(e) for e in np.eye(self.n)])

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator((self.n, self.n), matvec=lambda v: self.apply(np.ravel(v)))


@dataclass
class SolveReport:
    """Outcome of one Krylov solve.

    Args:
        iterations (int): Krylov steps taken.
        residuals (List[float]): Relative preconditioned residuals, starting at 1.
        converged (bool): Tolerance reached.
        wall_time (float): Seconds spent.
        true_residual (float): ``‖b - A x‖ / ‖b‖`` at exit.
        breakdown (bool): The Krylov space became invariant.
    """

    iterations: int = 0
    residuals: List[float] = field(default_factory=list)
    converged: bool = False
    wall_time: float = 0.0
    true_residual: float = 0.0
    breakdown: bool = False


def _identity(x: np.ndarray) -> np.ndarray:
    return x


def _check_rhs(A: LinearMap, b) -> np.ndarray:
    b = np.asarray(b)
    if b.ndim != 1 or b.size != A.n:
        raise ShapeError(f"right-hand side of length {b.size} for an operator of size {A.n}")
    return b


def _true_residual(A: LinearMap, x: np.ndarray, b: np.ndarray) -> float:
    norm_b = np.linalg.norm(b)
    return float(np.linalg.norm(b - A(x)) / norm_b) if norm_b else 0.0


def _givens(a, b) -> Tuple[float, complex, complex]:
    """Rotation zeroing ``b`` against ``a``; returns ``(c, s, r)``."""
    abs_a = abs(a)
    if abs_a == 0.0:
        return 0.0, 1.0, b
    d = np.hypot(abs_a, abs(b))
    phase = a / abs_a
    return abs_a / d, phase * np.conj(b) / d, phase * d


def gmres(
    A: LinearMap,
    b,
    precond: Optional[Preconditioner] = None,
    tol: float = GMRES_TOL,
    maxit: Optional[int] = None,
) -> Tuple[np.ndarray, SolveReport]:
    """Full (unrestarted) GMRES with modified Gram–Schmidt and left preconditioning.

    Starts from ``x0 = 0`` and stops when
    ``‖P⁻¹(b - A x)‖ / ‖P⁻¹ b‖ ≤ tol``.

    Args:
        A (LinearMap): Operator.
        b (array_like): Right-hand side.
        precond (Optional[Callable]): ``r -> P⁻¹ r``.
        tol (float, optional): Relative tolerance. Defaults to 1e-7.
        maxit (Optional[int], optional): Iteration cap. Defaults to ``n``.

    Returns:
        Tuple[np.ndarray, SolveReport]: Solution and report.
    """
    started = time.perf_counter()
    b = _check_rhs(A, b)
    solve_p = precond or _identity
    maxit = max(1, A.n if maxit is None else maxit)
    report = SolveReport(residuals=[1.0])

    r0 = np.asarray(solve_p(b))
    beta = float(np.linalg.norm(r0))
    if beta == 0.0:
        report.converged = True
        report.wall_time = time.perf_counter() - started
        return np.zeros_like(b, dtype=float), report

    v0 = r0 / beta
    w = np.asarray(solve_p(A(v0)))
    dtype = np.result_type(r0, w, float)
    V = np.zeros((maxit + 1, A.n), dtype=dtype)
    H = np.zeros((maxit + 1, maxit), dtype=dtype)
    cs = np.zeros(maxit)
    sn = np.zeros(maxit, dtype=dtype)
    g = np.zeros(maxit + 1, dtype=dtype)
    g[0] = beta
    V[0] = v0

    k = -1
    for k in range(maxit):
        if k > 0:
            w = np.asarray(solve_p(A(V[k])))
        w = w.astype(dtype, copy=True)
        for j in range(k + 1):
            H[j, k] = np.vdot(V[j], w)
            w -= H[j, k] * V[j]
        h_next = float(np.linalg.norm(w))
        H[k + 1, k] = h_next

        for j in range(k):
            top = cs[j] * H[j, k] + sn[j] * H[j + 1, k]
            H[j + 1, k] = -np.conj(sn[j]) * H[j, k] + cs[j] * H[j + 1, k]
            H[j, k] = top
        cs[k], sn[k], H[k, k] = _givens(H[k, k], H[k + 1, k])
        H[k + 1, k] = 0.0
        g[k + 1] = -np.conj(sn[k]) * g[k]
        g[k] = cs[k] * g[k]

        residual = abs(g[k + 1]) / beta
        report.residuals.append(float(residual))
        report.iterations = k + 1
        if residual <= tol:
            report.converged = True
            break
        if h_next <= 1e-14 * beta:
            report.converged = True
            report.breakdown = True
            logger.debug("GMRES breakdown at step %d", k + 1)
            break
        V[k + 1] = w / h_next

    m = k + 1
    y = solve_triangular(H[:m, :m], g[:m])
    x = V[:m].T @ y
    if not np.iscomplexobj(b) and np.iscomplexobj(x):
        x = x.real
    if not report.converged:
        logger.warning("GMRES stopped after %d iterations at residual %.3e", m, report.residuals[-1])

    report.true_residual = _true_residual(A, x, b)
    report.wall_time = time.perf_counter() - started
    return x, report


def minres(
    A: LinearMap,
    b,
    precond: Optional[Preconditioner] = None,
    tol: float = MINRES_TOL,
    maxit: Optional[int] = None,
) -> Tuple[np.ndarray, SolveReport]:
    """Preconditioned MINRES for a real symmetric ``A`` and an SPD preconditioner.

    Convergence is measured by the ``P⁻¹``-norm of the residual relative to
    that of ``b``.

    Raises:
        DefinitenessError: ``⟨r, P⁻¹ r⟩ < 0``, so the preconditioner is not SPD.
    """
    started = time.perf_counter()
    b = _check_rhs(A, b)
    solve_p = precond or _identity
    maxit = 5 * A.n if maxit is None else maxit
    report = SolveReport(residuals=[1.0])
    x = np.zeros(A.n)

    r1 = np.asarray(b, dtype=float)
    y = np.real(solve_p(r1))
    beta1 = float(r1 @ y)
    if beta1 < 0:
        raise DefinitenessError("preconditioner is not positive definite")
    if beta1 == 0:
        report.converged = True
        report.wall_time = time.perf_counter() - started
        return x, report
    beta1 = np.sqrt(beta1)

    oldb, beta, dbar, epsln = 0.0, beta1, 0.0, 0.0
    phibar, cs, sn = beta1, -1.0, 0.0
    w = np.zeros(A.n)
    w2 = np.zeros(A.n)
    r2 = r1
    eps = np.finfo(float).eps

    for itn in range(1, maxit + 1):
        v = y / beta
        y = np.real(A(v))
        if itn >= 2:
            y = y - (beta / oldb) * r1
        alfa = float(v @ y)
        y = y - (alfa / beta) * r2
        r1, r2 = r2, y
        y = np.real(solve_p(r2))
        oldb = beta
        beta = float(r2 @ y)
        if beta < 0:
            raise DefinitenessError("preconditioner is not positive definite")
        beta = np.sqrt(beta)

        oldeps = epsln
        delta = cs * dbar + sn * alfa
        gbar = sn * dbar - cs * alfa
        epsln = sn * beta
        dbar = -cs * beta
        gamma = max(np.hypot(gbar, beta), eps)
        cs, sn = gbar / gamma, beta / gamma
        phi = cs * phibar
        phibar = sn * phibar

        w1, w2 = w2, w
        w = (v - oldeps * w1 - delta * w2) / gamma
        x = x + phi * w

        residual = phibar / beta1
        report.residuals.append(float(residual))
        report.iterations = itn
        if residual <= tol:
            report.converged = True
            break
        if beta <= eps * beta1:
            report.converged = True
            report.breakdown = True
            break

    if not report.converged:
        logger.warning("MINRES stopped after %d iterations at residual %.3e",
                       report.iterations, report.residuals[-1])
    report.true_residual = _true_residual(A, x, b)
    report.wall_time = time.perf_counter() - started
    return x, report
