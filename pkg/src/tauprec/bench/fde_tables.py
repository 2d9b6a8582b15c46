"""Iteration and condition-number tables of the fractional diffusion benchmarks."""
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from tauprec.bench.reference import (
    ITERATIONS_1D,
    ITERATIONS_2D,
    KAPPA_1D,
    KAPPA_2D,
    SIZES_1D,
    SIZES_2D,
    lookup,
)
from tauprec.config import RunConfig
from tauprec.constants import DENSE_CAP_1D, DENSE_CAP_2D, GMRES_TOL
from tauprec.exceptions import ConfigError
from tauprec.fde.evolution import EvolutionResult, solve_evolution_1d, solve_evolution_2d
from tauprec.fde.preconditioners import CHOICES_1D, CHOICES_2D, PrecondChoice
from tauprec.fde.problems import example_1d, example_2d
from tauprec.logger import get_logger
from tauprec.report_writer import RunOutput, write_csv, write_report, write_table
from tauprec.spectra.analysis import scaled_spectrum

logger = get_logger(__name__)

DEFAULT_ALPHAS_1D = (1.2, 1.5, 1.8)
DEFAULT_SIZES_2D = (16, 32)
EXAMPLE_BETAS = {"2": 1.6, "3": 1.2}
HEADER = [
    "alpha", "beta", "n", "preconditioner", "iterations", "ms", "kappa", "error",
    "converged", "reference_iterations", "reference_kappa",
]


@dataclass
class TableRow:
    alpha: float
    beta: Optional[float]
    n: int
    label: str
    result: EvolutionResult
    reference_iterations: Optional[float] = None
    reference_kappa: Optional[float] = None

    def cells(self) -> list:
        r = self.result
        return [
            self.alpha, self.beta, self.n, self.label, r.avg_iterations, 1000.0 * r.total_time,
            r.kappa, r.error, r.converged, self.reference_iterations, self.reference_kappa,
        ]


def parse_choices(raw: str, allowed: Sequence[PrecondChoice]) -> List[PrecondChoice]:
    """Comma-separated preconditioner names; empty means all of ``allowed``."""
    if not raw:
        return list(allowed)
    choices = []
    for name in (part.strip() for part in raw.split(",") if part.strip()):
        try:
            choice = PrecondChoice(name)
        except ValueError:
            raise ConfigError(f"unknown preconditioner {name!r}") from None
        if choice not in allowed:
            raise ConfigError(f"preconditioner {name!r} is not available here")
        choices.append(choice)
    return choices


def _map(workers: int, func, jobs):
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda job: func(*job), jobs))
    return [func(*job) for job in jobs]


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


def _write_spectra(out: Path, rows: List[TableRow], seed: int) -> List[Path]:
    files = []
    for row in rows:
        spectrum = row.result.spectrum
        if spectrum is None:
            continue
        scaled = scaled_spectrum(spectrum, seed=seed)
        name = f"spectrum_{_slug(row.label)}_a{row.alpha:g}_n{row.n}.csv"
        files.append(write_csv(out / "spectra" / name, "scaled-spectrum", {"eig": spectrum, "scaled": scaled.values}))
    return files


def _finish(config: RunConfig, name: str, rows: List[TableRow], metrics: dict) -> RunOutput:
    out = Path(config.out)
    output = RunOutput(metrics=metrics)
    output.files.append(write_table(out / f"{name}.csv", name, HEADER, [row.cells() for row in rows]))
    output.files.extend(_write_spectra(out, rows, config.seed))
    for row in rows:
        key = f"{_slug(row.label)}_a{row.alpha:g}_n{row.n}"
        metrics[f"{key}_iterations"] = row.result.avg_iterations
        metrics[f"{key}_kappa"] = row.result.kappa
    output.files.append(write_report(out / "report.txt", metrics))
    return output


def run_fde1d(config: RunConfig) -> RunOutput:
    """Table of the 1D bench problem over ``alphas × sizes × preconditioners``."""
    alphas = config.alphas or DEFAULT_ALPHAS_1D
    sizes = config.sizes or SIZES_1D
    choices = parse_choices(config.precond, CHOICES_1D)
    tol = config.tol or GMRES_TOL
    cap = config.dense_cap or DENSE_CAP_1D

    def solve(alpha: float, n: int, choice: PrecondChoice) -> EvolutionResult:
        return solve_evolution_1d(example_1d(alpha, n), choice, tol=tol, dense_cap=cap, spectrum=config.spectra)

    jobs: List[Tuple[float, int, PrecondChoice]] = [(a, n, c) for a in alphas for n in sizes for c in choices]
    results = _map(config.workers, solve, jobs)
    rows = []
    for (alpha, n, choice), result in zip(jobs, results):
        label = result.label
        rows.append(
            TableRow(alpha, None, n, label, result,
                     lookup(ITERATIONS_1D, label, alpha, n, SIZES_1D),
                     lookup(KAPPA_1D, label, alpha, n, SIZES_1D))
        )
    metrics = {"experiment": "fde1d", "tol": tol, "runs": len(rows)}
    return _finish(config, "fde1d", rows, metrics)


def run_fde2d(config: RunConfig) -> RunOutput:
    """Table of the 2D bench problem; ``example`` 2 uses β = 1.6 and 3 uses β = 1.2."""
    example = config.example or "2"
    if config.beta is None and example not in EXAMPLE_BETAS:
        raise ConfigError(f"unknown 2D example {example!r}; choose 2 or 3 or give beta")
    beta = config.beta if config.beta is not None else EXAMPLE_BETAS[example]
    alphas = config.alphas or (1.8,)
    sizes = config.sizes or DEFAULT_SIZES_2D
    choices = parse_choices(config.precond, CHOICES_2D)
    tol = config.tol or GMRES_TOL
    cap = config.dense_cap or DENSE_CAP_2D

    def solve(alpha: float, n: int, choice: PrecondChoice) -> EvolutionResult:
        return solve_evolution_2d(example_2d(alpha, beta, n), choice, tol=tol, dense_cap=cap, spectrum=config.spectra)

    jobs = [(a, n, c) for a in alphas for n in sizes for c in choices]
    results = _map(config.workers, solve, jobs)
    iterations = ITERATIONS_2D.get(example, {})
    kappas = KAPPA_2D.get(example, {})
    rows = []
    for (alpha, n, choice), result in zip(jobs, results):
        label = result.label
        reference = beta == EXAMPLE_BETAS.get(example)
        rows.append(
            TableRow(alpha, beta, n, label, result,
                     lookup(iterations, label, alpha, n, SIZES_2D) if reference else None,
                     lookup(kappas, label, alpha, n, SIZES_2D) if reference else None)
        )
    metrics = {"experiment": "fde2d", "example": example, "beta": beta, "tol": tol, "runs": len(rows)}
    return _finish(config, "fde2d", rows, metrics)
