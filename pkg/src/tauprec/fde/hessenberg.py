"""Direct solver for the pure Grünwald system ``-T_{α,n} x = b``."""
import numpy as np

from tauprec.exceptions import PivotError, ShapeError
from tauprec.toeplitz_core import ToeplitzOperator, _check_order, binomial_series


def inverse_order_toeplitz(alpha: float, n: int) -> ToeplitzOperator:
    """Lower triangular Toeplitz matrix of the order ``-α`` coefficients."""
    _check_order(alpha)
    coeffs = np.zeros(2 * n - 1)
    coeffs[n - 1 :] = binomial_series(-alpha, n - 1)
    return ToeplitzOperator(coeffs, n)


def hessenberg_direct_solve(alpha: float, b) -> np.ndarray:
    """Solve ``-T_{α,n} x = b`` with one Toeplitz matvec and a substitution.

    Multiplying by the order ``-α`` matrix turns ``-T_{α,n}`` into a lower
    Hessenberg matrix whose first column holds ``-ĝ_{k+1}`` and whose
    superdiagonal is all ones; the last row fixes ``x_0`` and the others
    give the remaining unknowns.

    Args:
        alpha (float): Order in ``(1, 2]``.
        b (array_like): Right-hand side.

    Returns:
        np.ndarray: Solution.

    Raises:
        PivotError: ``ĝ_n`` vanishes.
    """
    b = np.asarray(b, dtype=float)
    if b.ndim != 1 or b.size == 0:
        raise ShapeError(f"nonempty vector expected, got shape {b.shape}")
    n = b.size
    g_hat = binomial_series(-alpha, n)
    c = inverse_order_toeplitz(alpha, n).matvec(b)

    if g_hat[n] == 0:
        raise PivotError("vanishing pivot in the Hessenberg elimination", index=n - 1)
    x = np.empty(n)
    x[0] = -c[n - 1] / g_hat[n]
    x[1:] = c[: n - 1] + g_hat[1:n] * x[0]
    return x
