"""Monte Carlo value of an exercise policy, used to cross-check the PDE values."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from tauprec.amput.model import Boundary, PutParams
from tauprec.constants import MC_CHUNK
from tauprec.exceptions import DomainError
from tauprec.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MCResult:
    mean: float
    stderr: float
    paths: int


def _chunk(
    params: PutParams,
    boundary: Boundary,
    s0: float,
    tau0: float,
    steps: int,
    dt: float,
    paths: int,
    seed: np.random.SeedSequence,
) -> Tuple[float, float]:
    """Sum and sum of squares of the discounted payoffs of ``paths`` paths."""
    rng = np.random.default_rng(seed)
    r, sigma, K = params.rate, params.volatility, params.strike
    drift = (r - 0.5 * sigma**2) * dt
    shock = sigma * np.sqrt(dt)

    z = np.full(paths, float(s0))
    value = np.zeros(paths)
    alive = np.ones(paths, dtype=bool)

    exercise = z <= boundary.at(tau0)
    value[exercise] = K - z[exercise]
    alive &= ~exercise

    for k in range(1, steps + 1):
        if not alive.any():
            break
        z[alive] *= np.exp(drift + shock * rng.standard_normal(np.count_nonzero(alive)))
        tau = max(tau0 - k * dt, 0.0)
        discount = np.exp(-r * k * dt)
        if k == steps:
            value[alive] = discount * np.maximum(K - z[alive], 0.0)
            break
        exercise = alive & (z <= boundary.at(tau))
        value[exercise] = discount * (K - z[exercise])
        alive &= ~exercise

    return float(value.sum()), float(np.square(value).sum())


def mc_simulate(
    params: PutParams,
    boundary: Boundary,
    s0: float,
    n_paths: int,
    dt: float,
    tau0: Optional[float] = None,
    seed: int = 0,
    workers: int = 1,
    chunk: int = MC_CHUNK,
) -> MCResult:
    """Simulate geometric Brownian paths and exercise at the first boundary crossing.

    Paths follow ``z ← z exp((r - σ²/2)δt + σ√δt ε)``; a path stops when
    ``z ≤ b(τ)`` with the boundary interpolated linearly, or at expiry with
    payoff ``(K - z)⁺``. Chunks draw from generators spawned from
    ``SeedSequence(seed)``, so the result does not depend on ``workers``.

    Args:
        params (PutParams): Option data.
        boundary (Boundary): Exercise boundary in time to expiry.
        s0 (float): Initial price.
        n_paths (int): Number of paths.
        dt (float): Simulation step.
        tau0 (Optional[float], optional): Initial time to expiry. Defaults
            to the horizon.
        seed (int, optional): Seed. Defaults to 0.
        workers (int, optional): Threads. Defaults to 1.
        chunk (int, optional): Paths per chunk.

    Returns:
        MCResult: Mean discounted payoff and its standard error.
    """
    if n_paths < 2:
        raise DomainError("at least two paths are needed for a standard error")
    if dt <= 0:
        raise DomainError(f"simulation step must be positive, got {dt}")
    tau0 = params.horizon if tau0 is None else float(tau0)
    steps = max(1, int(round(tau0 / dt)))
    dt = tau0 / steps

    sizes = [chunk] * (n_paths // chunk)
    if n_paths % chunk:
        sizes.append(n_paths % chunk)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(params, boundary, s0, tau0, steps, dt, size, ss) for size, ss in zip(sizes, seeds)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(lambda job: _chunk(*job), jobs))
    else:
        sums = [_chunk(*job) for job in jobs]

    total = sum(s for s, _ in sums)
    total_sq = sum(q for _, q in sums)
    mean = total / n_paths
    variance = max(total_sq / n_paths - mean**2, 0.0) * n_paths / (n_paths - 1)
    stderr = float(np.sqrt(variance / n_paths))
    logger.info("Monte Carlo at S0=%g: %.4f +- %.4f (%d paths)", s0, mean, stderr, n_paths)
    return MCResult(mean=float(mean), stderr=stderr, paths=n_paths)
