"""Preconditioner factory for the fractional diffusion systems."""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from tauprec.algebras import (
    Kron2DTau,
    TauOperator,
    circulant_abs,
    optimal_frobenius_circulant,
    tau_from_symbol,
    tridiagonal_from_operator,
)
from tauprec.exceptions import DefinitenessError, DomainError
from tauprec.fde.assembly import assemble_1d
from tauprec.fde.problems import DiffusionProblem1D, DiffusionProblem2D
from tauprec.logger import get_logger
from tauprec.symbols import SymbolGrid, g_alpha, p_alpha, q_alpha
from tauprec.toeplitz_core import ToeplitzOperator, fractional_toeplitz

logger = get_logger(__name__)


class PrecondChoice(str, Enum):
    """Available preconditioners."""

    IDENTITY = "identity"
    CIRCULANT = "circulant"
    FULL_SYMBOL = "full-symbol"
    TAU_SYMBOL = "tau-symbol"
    TAU_SYMBOL_HAT = "tau-symbol-hat"
    ALT_SYMBOL = "alt-symbol"
    TRIDIAGONAL = "tridiagonal"


CHOICES_1D = tuple(PrecondChoice)
CHOICES_2D = (PrecondChoice.IDENTITY, PrecondChoice.TAU_SYMBOL, PrecondChoice.TAU_SYMBOL_HAT)


@dataclass
class Preconditioner:
    """A built preconditioner.

    Args:
        choice (PrecondChoice): Which one.
        solve (Callable): ``r -> P⁻¹ r``.
        apply (Optional[Callable]): ``x -> P x`` when available.
        label (str): Table column label.
    """

    choice: PrecondChoice
    solve: Callable[[np.ndarray], np.ndarray]
    apply: Optional[Callable[[np.ndarray], np.ndarray]] = None
    label: str = ""

    def __call__(self, r):
        return self.solve(r)


def _identity(choice: PrecondChoice) -> Preconditioner:
    return Preconditioner(choice, solve=lambda r: np.asarray(r), apply=lambda x: np.asarray(x), label="I")


def _diffusion_average(plus: np.ndarray, minus: np.ndarray) -> np.ndarray:
    average = 0.5 * (plus + minus)
    bad = np.flatnonzero(average <= 0)
    if bad.size:
        raise DefinitenessError(f"d₊ + d₋ vanishes at node {bad[0]}")
    return average


def symmetric_part(T: ToeplitzOperator) -> ToeplitzOperator:
    """``T + Tᵀ`` as a Toeplitz operator."""
    return ToeplitzOperator(T.coeffs + T.coeffs[::-1], T.n)


def build_preconditioner_1d(
    problem: DiffusionProblem1D,
    m: int,
    choice: PrecondChoice,
    real_part: bool = False,
) -> Preconditioner:
    """Build a preconditioner for ``assemble_1d(problem, m)``.

    Args:
        problem (DiffusionProblem1D): Problem.
        m (int): Time index of the coefficients.
        choice (PrecondChoice): Preconditioner.
        real_part (bool, optional): Full-symbol only: keep the real part of
            the complex diagonal instead of solving in complex arithmetic.

    Returns:
        Preconditioner: The preconditioner.
    """
    choice = PrecondChoice(choice)
    n, alpha, nu = problem.n, problem.alpha, problem.nu
    plus, minus = problem.coefficients(problem.time(m))
    theta = SymbolGrid("tau", n).nodes

    if choice is PrecondChoice.IDENTITY:
        return _identity(choice)

    if choice is PrecondChoice.TRIDIAGONAL:
        tri = tridiagonal_from_operator(assemble_1d(problem, m))
        return Preconditioner(choice, solve=tri.solve, apply=tri.matvec, label="P_tri")

    if choice is PrecondChoice.FULL_SYMBOL:
        g = g_alpha(alpha)
        diagonal = nu + plus * g(theta) + minus * g(-theta)
        if real_part:
            diagonal = diagonal.real
        tau = TauOperator(diagonal)

        def solve_full(r):
            x = tau.solve(r)
            return x.real if not np.iscomplexobj(r) else x

        return Preconditioner(choice, solve=solve_full, apply=tau.apply, label="P_full")

    average = _diffusion_average(plus, minus)
    p = p_alpha(alpha)

    if choice is PrecondChoice.CIRCULANT:
        shifted = symmetric_part(fractional_toeplitz(alpha, n, "first"))
        coeffs = shifted.coeffs.copy()
        coeffs[n - 1] += nu
        C = circulant_abs(optimal_frobenius_circulant(ToeplitzOperator(coeffs, n)))
        return Preconditioner(
            choice,
            solve=lambda r: C.solve(np.asarray(r) / average),
            apply=lambda x: average * C.matvec(x),
            label="P_C (variant)",
        )

    if choice is PrecondChoice.TAU_SYMBOL:
        tau = tau_from_symbol(p, n, outer=average)
        return Preconditioner(choice, solve=tau.solve, apply=tau.apply, label="P_F")

    if choice is PrecondChoice.TAU_SYMBOL_HAT:
        shift = nu * float(np.mean(1.0 / average))
        tau = TauOperator(p(theta) + shift, outer=average)
        return Preconditioner(choice, solve=tau.solve, apply=tau.apply, label="P_F^")

    if choice is PrecondChoice.ALT_SYMBOL:
        tau = TauOperator(average * p(theta))
        return Preconditioner(choice, solve=tau.solve, apply=tau.apply, label="P~")

    raise DomainError(f"unsupported preconditioner {choice.value!r}")


def build_preconditioner_2d(
    problem: DiffusionProblem2D, choice: PrecondChoice, m: int = 1
) -> Preconditioner:
    """Build a τ preconditioner for ``assemble_2d(problem, m)``.

    ``tau-symbol`` samples ``q_α(θ₁) + (s/r) q_β(θ₂)`` with the outer
    diagonal ``(D₊ + D₋ + E₊ + E₋)/4``; ``tau-symbol-hat`` folds ``1/r`` and
    the mean coefficients into the diagonal and has no outer factor.
    """
    choice = PrecondChoice(choice)
    if choice not in CHOICES_2D:
        raise DomainError(f"{choice.value!r} is not available for 2D problems")
    if choice is PrecondChoice.IDENTITY:
        return _identity(choice)

    n1, n2 = problem.n1, problem.n2
    qa = q_alpha(problem.alpha)(SymbolGrid("tau", n1).nodes)
    qb = q_alpha(problem.beta)(SymbolGrid("tau", n2).nodes)
    ratio = problem.s / problem.r
    dp, dm, ep, em = problem.coefficients(problem.time(m))

    if choice is PrecondChoice.TAU_SYMBOL:
        F = qa[None, :] + ratio * qb[:, None]
        outer = 0.25 * (dp + dm + ep + em)
        tau = Kron2DTau(F, n1, n2, outer=outer)
        label = "P_F"
    else:
        d_bar = float(np.mean(0.5 * (dp + dm)))
        e_bar = float(np.mean(0.5 * (ep + em)))
        F = 1.0 / problem.r + d_bar * qa[None, :] + ratio * e_bar * qb[:, None]
        tau = Kron2DTau(F, n1, n2)
        label = "P_F^"
    logger.debug("2D τ preconditioner %s on %dx%d", label, n1, n2)
    return Preconditioner(choice, solve=tau.solve, apply=tau.apply, label=label)
