"""MINRES on ``Y_n h(T_n(f))`` with the two absolute-value circulant preconditioners."""
from pathlib import Path
from typing import Dict, List

import numpy as np

from tauprec.config import RunConfig
from tauprec.constants import MINRES_TOL
from tauprec.krylov import LinearMap, minres
from tauprec.logger import get_logger
from tauprec.report_writer import RunOutput, write_csv, write_plot_script, write_report, write_table
from tauprec.spectra.analysis import cluster_outliers, preconditioned_eigs
from tauprec.spectra.catalog import circulant_preconditioners, get_example, symmetrized_matrix

logger = get_logger(__name__)

DEFAULT_EXAMPLE = "poly"
DEFAULT_SIZES = {"poly": 512}
CLUSTER = (-1.0, 1.0)


def run_precond_compare(config: RunConfig, plot: bool = False) -> RunOutput:
    """Iteration counts and preconditioned spectra for both preconditioners.

    Writes ``precond_spectra.csv`` (sorted eigenvalues of ``P⁻¹A`` per
    preconditioner), ``iterations.csv`` and ``report.txt``.
    """
    example = get_example(config.example or DEFAULT_EXAMPLE)
    n = config.sizes[0] if config.sizes else DEFAULT_SIZES.get(example.name, example.n)
    A = symmetrized_matrix(example, n)
    op = LinearMap.from_matrix(A, symmetric=True)
    b = np.random.default_rng(config.seed).standard_normal(n)
    tol = config.tol or MINRES_TOL

    rows: List[list] = []
    spectra: Dict[str, np.ndarray] = {}
    _, plain = minres(op, b, tol=tol, maxit=config.maxit)
    rows.append(["I", plain.iterations, plain.converged, None, None])

    for label, P in circulant_preconditioners(example, n).items():
        _, report = minres(op, b, P.solve, tol=tol, maxit=config.maxit)
        eigs = preconditioned_eigs(A, P.todense())
        outliers = cluster_outliers(eigs, targets=CLUSTER, eps=config.eps_cluster)
        spectra[label] = eigs
        rows.append([label, report.iterations, report.converged, outliers, 1.0 - outliers / n])
        logger.info("%s: %d MINRES iterations, %d outliers", label, report.iterations, outliers)

    out = Path(config.out)
    output = RunOutput()
    columns = {"index": np.arange(1, n + 1)}
    columns.update({f"P{k}": v for k, v in enumerate(spectra.values(), start=1)})
    output.files.append(write_csv(out / "precond_spectra.csv", "precond-spectra", columns))
    output.files.append(
        write_table(
            out / "iterations.csv",
            "precond-iterations",
            ["preconditioner", "iterations", "converged", "outliers", "clustered_fraction"],
            rows,
        )
    )
    output.metrics = {"example": example.name, "n": n, "tol": tol, "eps": config.eps_cluster}
    for k, row in enumerate(rows):
        output.metrics[f"iterations_{k}"] = row[1]
        if row[3] is not None:
            output.metrics[f"outliers_{k}"] = row[3]
    output.metrics["preconditioners"] = "; ".join(f"{k}: {row[0]}" for k, row in enumerate(rows))
    output.files.append(write_report(out / "report.txt", output.metrics))
    if plot:
        output.files.append(
            write_plot_script(out / "precond_spectra.gp", "precond_spectra.csv", 1, [2, 3],
                              f"preconditioned spectra, {example.name}", labels=list(spectra))
        )
    return output
