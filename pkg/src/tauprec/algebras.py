"""Circulant and τ matrix algebras, plus the tridiagonal baseline."""
from typing import Callable, Optional, Union

import numpy as np
from scipy import fft as sfft

from tauprec.constants import EIGEN_FLOOR
from tauprec.exceptions import DefinitenessError, PivotError, ShapeError, SingularityError
from tauprec.logger import get_logger
from tauprec.symbols import SymbolGrid
from tauprec.toeplitz_core import AnalyticFunction, ToeplitzOperator, _realify

logger = get_logger(__name__)


# --------------------------------------------------------------------------- #
# Circulants
# --------------------------------------------------------------------------- #


class CirculantOperator:
    """Circulant matrix stored through its eigenvalues ``λ = DFT(first column)``.

    Args:
        column (array_like): First column.
    """

    def __init__(self, column):
        column = _realify(np.asarray(column))
        if column.ndim != 1 or column.size == 0:
            raise ShapeError(f"circulant needs a nonempty vector, got {column.shape}")
        self.column = column
        self.eigenvalues = sfft.fft(column)
        self.n = column.size

    @classmethod
    def from_eigenvalues(cls, eigenvalues) -> "CirculantOperator":
        op = cls(sfft.ifft(np.asarray(eigenvalues, dtype=complex)))
        op.eigenvalues = np.asarray(eigenvalues, dtype=complex)
        return op

    @classmethod
    def from_toeplitz_coeffs(cls, coeffs, n: int) -> "CirculantOperator":
        """Frobenius-optimal circulant of the Toeplitz matrix with these coefficients."""
        return optimal_frobenius_circulant(ToeplitzOperator(coeffs, n))

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.column)

    def matvec(self, x) -> np.ndarray:
        x = np.asarray(x)
        if x.shape[0] != self.n:
            raise ShapeError(f"operand length {x.shape[0]} != {self.n}")
        y = sfft.ifft(self.eigenvalues * sfft.fft(x))
        return y.real if self.is_real and not np.iscomplexobj(x) else y

    def __matmul__(self, x):
        return self.matvec(x)

    def solve(self, b) -> np.ndarray:
        return circulant_solve(self, b)

    def todense(self) -> np.ndarray:
        j = np.arange(self.n)
        return self.column[(j[:, None] - j[None, :]) % self.n]


def optimal_frobenius_circulant(T: ToeplitzOperator) -> CirculantOperator:
    """Circulant closest to ``T`` in Frobenius norm.

    First column ``c_k = ((n - k) a_k + k a_{k-n}) / n``.
    """
    n = T.n
    k = np.arange(n)
    upper = T.coeffs[n - 1 :]
    wrapped = np.concatenate(([0], T.coeffs[: n - 1]))  # a_{k-n}, k = 1..n-1
    column = ((n - k) * upper + k * wrapped) / n
    return CirculantOperator(column)


def circulant_abs(C: CirculantOperator) -> CirculantOperator:
    """``|C|``: same eigenvectors, eigenvalues ``|λ_j|``."""
    return CirculantOperator.from_eigenvalues(np.abs(C.eigenvalues))


def circulant_matfun(h: Union[AnalyticFunction, Callable], C: CirculantOperator) -> CirculantOperator:
    """Apply ``h`` to the eigenvalues of ``C``.

    Raises:
        SingularityError: ``h`` is not finite at some eigenvalue.
    """
    values = np.asarray(h(C.eigenvalues), dtype=complex)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise SingularityError(
            f"function has a pole at eigenvalue {C.eigenvalues[bad[0]]}", index=int(bad[0])
        )
    return CirculantOperator.from_eigenvalues(values)


def circulant_solve(C: CirculantOperator, b) -> np.ndarray:
    """Solve ``C x = b`` by FFT, division and inverse FFT.

    Raises:
        SingularityError: Some ``|λ_j|`` is below ``1e-13 max|λ|``.
    """
    b = np.asarray(b)
    if b.shape[0] != C.n:
        raise ShapeError(f"right-hand side length {b.shape[0]} != {C.n}")
    magnitudes = np.abs(C.eigenvalues)
    worst = int(np.argmin(magnitudes))
    if magnitudes[worst] <= EIGEN_FLOOR * magnitudes.max():
        raise SingularityError(f"circulant eigenvalue {worst} is numerically zero", index=worst)
    x = sfft.ifft(sfft.fft(b) / C.eigenvalues)
    return x.real if C.is_real and not np.iscomplexobj(b) else x


# --------------------------------------------------------------------------- #
# Sine transform and τ algebra
# --------------------------------------------------------------------------- #


def dst1_apply(x, axis: int = -1) -> np.ndarray:
    """Orthonormal DST-I ``S_n`` along ``axis`` through a length ``2(n+1)`` FFT.

    ``S_n`` is symmetric and involutory.
    """
    x = np.asarray(x)
    moved = np.moveaxis(x, axis, -1)
    n = moved.shape[-1]
    zeros = np.zeros(moved.shape[:-1] + (1,), dtype=moved.dtype)
    extended = np.concatenate((zeros, moved, zeros, -moved[..., ::-1]), axis=-1)
    y = 0.5j * sfft.fft(extended, axis=-1)[..., 1 : n + 1] * np.sqrt(2.0 / (n + 1))
    if not np.iscomplexobj(x):
        y = y.real
    return np.moveaxis(y, -1, axis)


def dst1_matrix(n: int) -> np.ndarray:
    """Dense ``S_n``."""
    j = np.arange(1, n + 1)
    return np.sqrt(2.0 / (n + 1)) * np.sin(np.outer(j, j) * np.pi / (n + 1))


def _check_diagonal(values: np.ndarray, what: str) -> None:
    if np.iscomplexobj(values):
        magnitudes = np.abs(values)
        worst = int(np.argmin(magnitudes))
        if magnitudes[worst] <= EIGEN_FLOOR * magnitudes.max():
            raise SingularityError(f"{what} entry {worst} is numerically zero", index=worst)
        return
    bad = np.flatnonzero(values <= 0)
    if bad.size:
        raise DefinitenessError(f"{what} entry {bad[0]} is {values[bad[0]]:.3g}, expected > 0")


class TauOperator:
    """``D · S diag(F) S`` with an optional outer diagonal ``D``.

    Args:
        F (array_like): Eigenvalues (real, or complex for the full-symbol variant).
        outer (Optional[array_like]): Diagonal applied on the left.
    """

    def __init__(self, F, outer=None):
        self.F = np.asarray(F)
        self.n = self.F.size
        self.outer = None if outer is None else np.asarray(outer, dtype=float)
        if self.outer is not None and self.outer.size != self.n:
            raise ShapeError("outer diagonal and τ diagonal differ in length")

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.F

    def apply(self, x) -> np.ndarray:
        y = dst1_apply(self.F * dst1_apply(x))
        return y if self.outer is None else self.outer * y

    def solve(self, b) -> np.ndarray:
        b = np.asarray(b)
        if b.size != self.n:
            raise ShapeError(f"right-hand side length {b.size} != {self.n}")
        _check_diagonal(self.F, "τ diagonal")
        if self.outer is not None:
            _check_diagonal(self.outer, "outer diagonal")
            b = b / self.outer
        return dst1_apply(dst1_apply(b) / self.F)

    def todense(self) -> np.ndarray:
        S = dst1_matrix(self.n)
        dense = S @ (self.F[:, None] * S)
        return dense if self.outer is None else self.outer[:, None] * dense


def tau_from_symbol(f, n: int, outer=None) -> TauOperator:
    """``τ_n(f)``: the τ matrix with eigenvalues ``f(jπ/(n+1))``.

    Args:
        f (Union[FourierSymbol, array_like]): Real symbol or its samples.
        n (int): Size.
        outer (Optional[array_like]): Optional left diagonal.
    """
    if callable(f):
        samples = np.asarray(f(SymbolGrid("tau", n).nodes))
    else:
        samples = np.asarray(f)
        if samples.size != n:
            raise ShapeError(f"expected {n} samples, got {samples.size}")
    return TauOperator(_realify(samples), outer)


def tau_solve(P: TauOperator, b) -> np.ndarray:
    """Solve with a :class:`TauOperator`."""
    return P.solve(b)


class Kron2DTau:
    """``D · (S⊗S) diag(F) (S⊗S)`` on vectors ordered with the x index fastest.

    Args:
        F (array_like): Length ``n1 n2`` diagonal, ``F[i + n1 j]``.
        n1 (int): Nodes in x.
        n2 (int): Nodes in y.
        outer (Optional[array_like]): Left diagonal ``D``.
    """

    def __init__(self, F, n1: int, n2: int, outer=None):
        self.n1, self.n2 = n1, n2
        self.N = n1 * n2
        self.F = np.asarray(F, dtype=float).reshape(n2, n1)
        self.outer = None if outer is None else np.asarray(outer, dtype=float).ravel()
        if self.outer is not None and self.outer.size != self.N:
            raise ShapeError("outer diagonal has the wrong length")

    def _transform(self, grid: np.ndarray) -> np.ndarray:
        return dst1_apply(dst1_apply(grid, axis=1), axis=0)

    def apply(self, x) -> np.ndarray:
        grid = np.asarray(x).reshape(self.n2, self.n1)
        y = self._transform(self.F * self._transform(grid)).ravel()
        return y if self.outer is None else self.outer * y

    def solve(self, b) -> np.ndarray:
        b = np.asarray(b).ravel()
        if b.size != self.N:
            raise ShapeError(f"right-hand side length {b.size} != {self.N}")
        _check_diagonal(self.F.ravel(), "τ diagonal")
        if self.outer is not None:
            _check_diagonal(self.outer, "outer diagonal")
            b = b / self.outer
        grid = b.reshape(self.n2, self.n1)
        return self._transform(self._transform(grid) / self.F).ravel()

    def todense(self) -> np.ndarray:
        S = np.kron(dst1_matrix(self.n2), dst1_matrix(self.n1))
        dense = S @ (self.F.ravel()[:, None] * S)
        return dense if self.outer is None else self.outer[:, None] * dense


def tau2d_solve(P: Kron2DTau, b) -> np.ndarray:
    """Solve with a :class:`Kron2DTau`."""
    return P.solve(b)


# --------------------------------------------------------------------------- #
# Tridiagonal baseline
# --------------------------------------------------------------------------- #


class TridiagonalOperator:
    """Tridiagonal matrix given by its three diagonals.

    Args:
        lower (array_like): Subdiagonal, length ``n - 1``.
        diag (array_like): Main diagonal, length ``n``.
        upper (array_like): Superdiagonal, length ``n - 1``.
    """

    def __init__(self, lower, diag, upper):
        self.diag = np.asarray(diag)
        self.n = self.diag.size
        self.lower = np.asarray(lower)
        self.upper = np.asarray(upper)
        if self.lower.size != self.n - 1 or self.upper.size != self.n - 1:
            raise ShapeError("off diagonals must have length n - 1")

    def matvec(self, x) -> np.ndarray:
        x = np.asarray(x)
        y = self.diag * x
        y[1:] += self.lower * x[:-1]
        y[:-1] += self.upper * x[1:]
        return y

    def solve(self, b) -> np.ndarray:
        return thomas_solve(self, b)

    def todense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.lower, -1) + np.diag(self.upper, 1)


def _probe_columns(apply: Callable, n: int, banded: bool):
    lower = np.zeros(max(n - 1, 0))
    diag = np.zeros(n)
    upper = np.zeros(max(n - 1, 0))
    if banded:
        # three strided probes are exact when the operator is tridiagonal
        for shift in range(min(3, n)):
            v = np.zeros(n)
            v[shift::3] = 1.0
            y = np.real(apply(v))
            cols = np.arange(shift, n, 3)
            diag[cols] = y[cols]
            below = cols[cols < n - 1]
            lower[below] = y[below + 1]
            above = cols[cols > 0]
            upper[above - 1] = y[above - 1]
        return lower, diag, upper

    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        y = np.real(apply(e))
        diag[j] = y[j]
        if j < n - 1:
            lower[j] = y[j + 1]
        if j > 0:
            upper[j - 1] = y[j - 1]
    return lower, diag, upper


def tridiagonal_from_operator(M, banded: bool = False) -> TridiagonalOperator:
    """Keep the three main diagonals of ``M``.

    ``M`` may be a dense array, an object exposing ``diagonal(offset)``, or an
    object exposing ``apply`` and ``n``. In the last case columns are probed
    one by one, or with three strided probes when ``banded`` says the
    operator is itself tridiagonal.
    """
    if isinstance(M, np.ndarray):
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ShapeError(f"square matrix expected, got {M.shape}")
        return TridiagonalOperator(np.diagonal(M, -1), np.diagonal(M), np.diagonal(M, 1))

    diagonal = getattr(M, "diagonal", None)
    if callable(diagonal):
        return TridiagonalOperator(diagonal(-1), diagonal(0), diagonal(1))

    logger.debug("probing %d columns for the tridiagonal part", M.n)
    return TridiagonalOperator(*_probe_columns(M.apply, M.n, banded))


def thomas_solve(T: TridiagonalOperator, b) -> np.ndarray:
    """Thomas elimination for ``T x = b``.

    Raises:
        PivotError: A pivot vanishes.
    """
    a, d, c = T.lower, T.diag, T.upper
    rhs = np.asarray(b)
    n = T.n
    if rhs.size != n:
        raise ShapeError(f"right-hand side length {rhs.size} != {n}")
    dtype = np.result_type(a, d, c, rhs, float)
    c_ = np.zeros(n, dtype=dtype)
    d_ = np.zeros(n, dtype=dtype)

    pivot = d[0]
    if pivot == 0:
        raise PivotError("zero pivot in row 0", index=0)
    c_[0] = c[0] / pivot if n > 1 else 0.0
    d_[0] = rhs[0] / pivot

    for i in range(1, n):
        pivot = d[i] - a[i - 1] * c_[i - 1]
        if pivot == 0 or not np.isfinite(pivot):
            raise PivotError(f"zero pivot in row {i}", index=i)
        c_[i] = c[i] / pivot if i < n - 1 else 0.0
        d_[i] = (rhs[i] - a[i - 1] * d_[i - 1]) / pivot

    x = np.zeros(n, dtype=dtype)
    x[-1] = d_[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d_[i] - c_[i] * x[i + 1]
    return x
