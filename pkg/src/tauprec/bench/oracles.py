"""Dense-oracle checks run by ``tauprec selftest``."""
import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from tauprec.algebras import (
    CirculantOperator,
    Kron2DTau,
    TauOperator,
    TridiagonalOperator,
    dst1_apply,
    dst1_matrix,
    optimal_frobenius_circulant,
)
from tauprec.amput.model import PutParams, perpetual_put_boundary
from tauprec.bench.reference import PUT_PERPETUAL_BOUNDARY
from tauprec.exceptions import TauprecError
from tauprec.fde.hessenberg import hessenberg_direct_solve
from tauprec.krylov import LinearMap, gmres, minres
from tauprec.logger import get_logger
from tauprec.spectra.welzl import enclosing_circle
from tauprec.symbols import g_alpha
from tauprec.toeplitz_core import (
    QUADRATIC,
    ToeplitzOperator,
    fourier_coeffs_fft,
    fractional_toeplitz,
    grunwald_coeffs,
    matrix_function_dense,
    symbol_coefficients,
)

logger = get_logger(__name__)

Check = Callable[[np.random.Generator], Tuple[float, float]]
ORACLES: Dict[str, Check] = {}


@dataclass
class OracleResult:
    """Outcome of one check: measured error against its tolerance."""

    name: str
    error: float
    tol: float
    message: str = ""

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.error) and self.error <= self.tol)


def oracle(name: str) -> Callable[[Check], Check]:
    """Register a check returning ``(error, tol)``."""

    def register(func: Check) -> Check:
        ORACLES[name] = func
        return func

    return register


def _rel(actual, expected) -> float:
    actual, expected = np.asarray(actual), np.asarray(expected)
    scale = max(float(np.linalg.norm(expected)), np.finfo(float).tiny)
    return float(np.linalg.norm(actual - expected) / scale)


@oracle("toeplitz-matvec")
def check_toeplitz_matvec(rng: np.random.Generator) -> Tuple[float, float]:
    n = 256
    T = ToeplitzOperator(rng.standard_normal(2 * n - 1), n)
    x = rng.standard_normal(n)
    return _rel(T.matvec(x), T.todense() @ x), 1e-12


@oracle("circulant-solve")
def check_circulant_solve(rng: np.random.Generator) -> Tuple[float, float]:
    n = 128
    column = rng.uniform(-1.0, 1.0, n)
    column = 0.5 * (column + np.roll(column[::-1], 1))
    column[0] = 2.0 * np.abs(column).sum() + 1.0
    C = CirculantOperator(column)
    b = rng.standard_normal(n)
    return _rel(C.solve(b), np.linalg.solve(C.todense(), b)), 1e-10


@oracle("dst1")
def check_dst1(rng: np.random.Generator) -> Tuple[float, float]:
    n = 37
    x = rng.standard_normal(n)
    return _rel(dst1_apply(x), dst1_matrix(n) @ x), 1e-12


@oracle("tau-solve")
def check_tau_solve(rng: np.random.Generator) -> Tuple[float, float]:
    n = 256
    P = TauOperator(rng.uniform(0.5, 2.0, n), outer=rng.uniform(0.5, 2.0, n))
    b = rng.standard_normal(n)
    return _rel(P.solve(b), np.linalg.solve(P.todense(), b)), 1e-10


@oracle("tau2d-solve")
def check_tau2d_solve(rng: np.random.Generator) -> Tuple[float, float]:
    n1 = n2 = 16
    P = Kron2DTau(rng.uniform(0.5, 2.0, n1 * n2), n1, n2, outer=rng.uniform(0.5, 2.0, n1 * n2))
    b = rng.standard_normal(n1 * n2)
    return _rel(P.solve(b), np.linalg.solve(P.todense(), b)), 1e-10


@oracle("hessenberg")
def check_hessenberg(rng: np.random.Generator) -> Tuple[float, float]:
    n, alpha = 256, 1.5
    b = rng.standard_normal(n)
    dense = -fractional_toeplitz(alpha, n).todense()
    return _rel(hessenberg_direct_solve(alpha, b), np.linalg.solve(dense, b)), 1e-8


@oracle("thomas")
def check_thomas(rng: np.random.Generator) -> Tuple[float, float]:
    n = 256
    lower, upper = rng.uniform(-1, 1, n - 1), rng.uniform(-1, 1, n - 1)
    T = TridiagonalOperator(lower, rng.uniform(3, 4, n), upper)
    b = rng.standard_normal(n)
    return _rel(T.solve(b), np.linalg.solve(T.todense(), b)), 1e-12


@oracle("gmres")
def check_gmres(rng: np.random.Generator) -> Tuple[float, float]:
    n = 64
    A = np.eye(n) + 0.3 * rng.standard_normal((n, n)) / np.sqrt(n)
    b = rng.standard_normal(n)
    x, _ = gmres(LinearMap.from_matrix(A), b, tol=1e-12)
    return _rel(x, np.linalg.solve(A, b)), 1e-8


@oracle("minres")
def check_minres(rng: np.random.Generator) -> Tuple[float, float]:
    n = 64
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    signs = np.where(np.arange(n) % 2, -1.0, 1.0)
    A = (Q * (signs * np.linspace(0.5, 3.0, n))) @ Q.T
    A = 0.5 * (A + A.T)
    b = rng.standard_normal(n)
    x, _ = minres(LinearMap.from_matrix(A, symmetric=True), b, tol=1e-12)
    return _rel(x, np.linalg.solve(A, b)), 1e-8


@oracle("optimal-circulant-fixed-point")
def check_circulant_fixed_point(rng: np.random.Generator) -> Tuple[float, float]:
    n = 32
    c = rng.standard_normal(n)
    T = ToeplitzOperator(np.concatenate((c[1:], c)), n)
    return _rel(optimal_frobenius_circulant(T).column, c), 1e-13


@oracle("optimal-circulant-minimality")
def check_circulant_minimality(rng: np.random.Generator) -> Tuple[float, float]:
    n = 32
    T = ToeplitzOperator(rng.standard_normal(2 * n - 1), n)
    dense = T.todense()
    best = np.linalg.norm(dense - optimal_frobenius_circulant(T).todense())
    rivals = min(
        np.linalg.norm(dense - CirculantOperator(rng.standard_normal(n)).todense()) for _ in range(100)
    )
    return max(0.0, float(best - rivals)), 0.0


@oracle("grunwald-invariants")
def check_grunwald(rng: np.random.Generator) -> Tuple[float, float]:
    worst = 0.0
    for alpha in np.linspace(1.1, 1.9, 9):
        g = grunwald_coeffs(alpha, 10_000).values
        tail = g[2:]
        ok = (
            g[0] == 1.0
            and abs(g[1] + alpha) < 1e-15
            and np.all(tail > 0)
            and np.all(np.diff(tail) <= 0)
            and np.all(np.cumsum(g)[1:] < 0)
        )
        if not ok:
            return float("inf"), 1e-2
        worst = max(worst, abs(np.abs(g).sum() - 2.0 * alpha))
    return worst, 1e-2


@oracle("symbol-coefficients")
def check_symbol_coefficients(rng: np.random.Generator) -> Tuple[float, float]:
    g = g_alpha(1.5)
    return float(np.max(np.abs(fourier_coeffs_fft(g, 32) - symbol_coefficients(g, 32)))), 1e-3


@oracle("matrix-polynomial")
def check_matrix_polynomial(rng: np.random.Generator) -> Tuple[float, float]:
    A = rng.standard_normal((64, 64)) / 8.0
    return _rel(matrix_function_dense(QUADRATIC, A), A @ A + A + np.eye(64)), 1e-12


def _brute_force_radius(points: np.ndarray) -> float:
    candidates = []
    for a, b in itertools.combinations(points, 2):
        candidates.append(((a + b) / 2.0, abs(a - b) / 2.0))
    for a, b, c in itertools.combinations(points, 3):
        d = 2.0 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
        if abs(d) < 1e-14:
            continue
        ux = (abs(a) ** 2 * (b.imag - c.imag) + abs(b) ** 2 * (c.imag - a.imag) + abs(c) ** 2 * (a.imag - b.imag)) / d
        uy = (abs(a) ** 2 * (c.real - b.real) + abs(b) ** 2 * (a.real - c.real) + abs(c) ** 2 * (b.real - a.real)) / d
        center = complex(ux, uy)
        candidates.append((center, abs(a - center)))
    best = np.inf
    for center, radius in candidates:
        if radius < best and np.all(np.abs(points - center) <= radius * (1 + 1e-12) + 1e-12):
            best = radius
    return float(best)


@oracle("enclosing-circle")
def check_enclosing_circle(rng: np.random.Generator) -> Tuple[float, float]:
    points = rng.standard_normal(30) + 1j * rng.standard_normal(30)
    return abs(enclosing_circle(points).radius - _brute_force_radius(points)), 1e-10


@oracle("perpetual-put")
def check_perpetual_put(rng: np.random.Generator) -> Tuple[float, float]:
    return abs(perpetual_put_boundary(PutParams()) - PUT_PERPETUAL_BOUNDARY), 1e-4


def run_selftest(seed: int = 0, names: Optional[Iterable[str]] = None) -> List[OracleResult]:
    """Run the registered checks, each with a fresh generator seeded by ``seed``."""
    selected = list(ORACLES) if names is None else list(names)
    results = []
    for name in selected:
        check = ORACLES[name]
        try:
            error, tol = check(np.random.default_rng(seed))
            result = OracleResult(name, float(error), float(tol))
        except TauprecError as exc:
            result = OracleResult(name, float("inf"), 0.0, message=str(exc))
        logger.debug("%s: error %.3e (tol %.1e)", name, result.error, result.tol)
        results.append(result)
    return results
