"""Matrix-free assembly of the fractional diffusion systems."""
from typing import Callable, Tuple

import numpy as np

from tauprec.constants import DENSE_CAP_1D, DENSE_CAP_2D
from tauprec.exceptions import ShapeError
from tauprec.fde.problems import DiffusionProblem1D, DiffusionProblem2D
from tauprec.krylov import LinearMap
from tauprec.toeplitz_core import ToeplitzOperator, fractional_toeplitz


def _check_state(u: np.ndarray, size: int) -> np.ndarray:
    u = np.asarray(u, dtype=float).ravel()
    if u.size != size:
        raise ShapeError(f"state of length {u.size}, expected {size}")
    return u


def _banded_entries(T: ToeplitzOperator, plus: np.ndarray, minus: np.ndarray, shift: float):
    """``diagonal(k)`` of ``shift I + diag(plus) T + diag(minus) Tᵀ``."""
    n = T.n

    def diagonal(k: int) -> np.ndarray:
        if abs(k) >= n:
            return np.zeros(0)
        rows = np.arange(max(0, -k), n - max(0, k))
        values = plus[rows] * T.coefficient(-k) + minus[rows] * T.coefficient(k)
        return values + shift if k == 0 else values

    return diagonal


def assemble_1d(problem: DiffusionProblem1D, m: int) -> LinearMap:
    """``M = ν I + D₊ T_{α,n} + D₋ T_{α,n}ᵀ`` with coefficients at ``t_m``.

    Args:
        problem (DiffusionProblem1D): Problem.
        m (int): Time index.

    Returns:
        LinearMap: Two Toeplitz matvecs per application.
    """
    T = fractional_toeplitz(problem.alpha, problem.n, "first")
    Tt = T.transpose()
    plus, minus = problem.coefficients(problem.time(m))
    nu = problem.nu

    def apply(x):
        x = np.asarray(x)
        return nu * x + plus * T.matvec(x) + minus * Tt.matvec(x)

    def dense():
        if problem.n > DENSE_CAP_1D:
            raise ShapeError(f"dense assembly is capped at n={DENSE_CAP_1D}")
        Td = T.todense()
        return nu * np.eye(problem.n) + plus[:, None] * Td + minus[:, None] * Td.T

    symmetric = bool(np.allclose(plus, minus) and np.ptp(plus) == 0)
    return LinearMap(
        n=problem.n,
        apply=apply,
        symmetric=symmetric,
        dense=dense,
        diagonal=_banded_entries(T, plus, minus, nu),
    )


def step_rhs_1d(problem: DiffusionProblem1D, m: int, u_prev) -> np.ndarray:
    """``ν u^{(m-1)} + h^α f(·, t_m)``."""
    u_prev = _check_state(u_prev, problem.n)
    forcing = np.asarray(problem.source(problem.nodes, problem.time(m)), dtype=float)
    return problem.nu * u_prev + problem.h**problem.alpha * forcing


def spatial_operators_2d(
    problem: DiffusionProblem2D, t: float
) -> Tuple[Callable[[np.ndarray], np.ndarray], Callable[[np.ndarray], np.ndarray]]:
    """``A_x = D₊(I⊗S_α) + D₋(I⊗S_αᵀ)`` and ``A_y = E₊(S_β⊗I) + E₋(S_βᵀ⊗I)`` at time ``t``."""
    n1, n2 = problem.n1, problem.n2
    Sa = fractional_toeplitz(problem.alpha, n1, "second")
    Sb = fractional_toeplitz(problem.beta, n2, "second")
    Sat, Sbt = Sa.transpose(), Sb.transpose()
    dp, dm, ep, em = problem.coefficients(t)

    def apply_x(u):
        grid = np.asarray(u).reshape(n2, n1)
        return dp * Sa.matvec(grid, axis=1).ravel() + dm * Sat.matvec(grid, axis=1).ravel()

    def apply_y(u):
        grid = np.asarray(u).reshape(n2, n1)
        return ep * Sb.matvec(grid, axis=0).ravel() + em * Sbt.matvec(grid, axis=0).ravel()

    return apply_x, apply_y


def dense_spatial_operators_2d(problem: DiffusionProblem2D, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """Dense ``A_x`` and ``A_y`` (for ``N ≤ 4096``)."""
    if problem.N > DENSE_CAP_2D:
        raise ShapeError(f"dense assembly is capped at N={DENSE_CAP_2D}")
    Sa = fractional_toeplitz(problem.alpha, problem.n1, "second").todense()
    Sb = fractional_toeplitz(problem.beta, problem.n2, "second").todense()
    I1, I2 = np.eye(problem.n1), np.eye(problem.n2)
    dp, dm, ep, em = problem.coefficients(t)
    Ax = dp[:, None] * np.kron(I2, Sa) + dm[:, None] * np.kron(I2, Sa.T)
    Ay = ep[:, None] * np.kron(Sb, I1) + em[:, None] * np.kron(Sb.T, I1)
    return Ax, Ay


def assemble_2d(problem: DiffusionProblem2D, m: int) -> LinearMap:
    """``(1/r) I + A_x + (s/r) A_y`` with coefficients at ``t_m``."""
    t = problem.time(m)
    apply_x, apply_y = spatial_operators_2d(problem, t)
    inv_r = 1.0 / problem.r
    ratio = problem.s / problem.r

    def apply(u):
        u = np.asarray(u).ravel()
        return inv_r * u + apply_x(u) + ratio * apply_y(u)

    def dense():
        Ax, Ay = dense_spatial_operators_2d(problem, t)
        return inv_r * np.eye(problem.N) + Ax + ratio * Ay

    return LinearMap(n=problem.N, apply=apply, dense=dense)


def cn_rhs_2d(problem: DiffusionProblem2D, m: int, u_prev) -> np.ndarray:
    """``((1/r) I - A_x - (s/r) A_y) u^{(m-1)} + 2 h_x^α f(t_{m-1/2})``.

    The operators use the coefficients at ``t_{m-1}``.
    """
    u_prev = _check_state(u_prev, problem.N)
    apply_x, apply_y = spatial_operators_2d(problem, problem.time(m - 1))
    X, Y = problem.mesh
    forcing = np.asarray(problem.source(X, Y, problem.time(m - 0.5)), dtype=float).ravel()
    ratio = problem.s / problem.r
    explicit = u_prev / problem.r - apply_x(u_prev) - ratio * apply_y(u_prev)
    return explicit + 2.0 * problem.hx**problem.alpha * forcing
