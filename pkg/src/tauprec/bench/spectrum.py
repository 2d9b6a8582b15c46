"""Spectra of ``Y_n h(T_n(f))`` and ``h(T_n(f))`` against their symbols."""
from pathlib import Path

import numpy as np

from tauprec.config import RunConfig
from tauprec.logger import get_logger
from tauprec.report_writer import RunOutput, write_csv, write_plot_script, write_report
from tauprec.spectra.analysis import SpectrumReport, dense_eigs, dense_svd
from tauprec.spectra.catalog import SpectrumExample, get_example, matrix_function, symmetrized_matrix
from tauprec.symbols import SymbolGrid

logger = get_logger(__name__)

DEFAULT_EXAMPLE = "poly"


def compute_spectrum(example: SpectrumExample, n: int, mode: str, eps: float, seed: int = 0) -> SpectrumReport:
    """Sorted spectrum of one example with its symbol companion.

    ``eig`` compares the eigenvalues of ``Y_n h(T_n(f))`` with ``ψ_{|h∘f|}``
    on ``[-2π, 2π]``; ``svd`` compares the singular values of ``h(T_n(f))``
    with ``|h∘f|``.
    """
    if mode == "svd":
        report = dense_svd(matrix_function(example, n))
        report.compare(example.svd_symbol, SymbolGrid("circulant", n), eps=eps)
    else:
        report = dense_eigs(symmetrized_matrix(example, n), symmetric=True)
        report.compare(example.eig_symbol, SymbolGrid("uniform2pi", n), eps=eps)
    return report.enclose(seed=seed)


def run_spectrum(config: RunConfig, plot: bool = False) -> RunOutput:
    """Compute a spectrum and write ``eigs.csv`` (or ``svd.csv``), ``symbol.csv`` and ``report.txt``."""
    example = get_example(config.example or DEFAULT_EXAMPLE)
    n = config.sizes[0] if config.sizes else example.n
    report = compute_spectrum(example, n, config.mode, config.eps_outlier, config.seed)
    logger.info("%s spectrum of %s at n=%d: %d outliers", config.mode, example.name, n, report.outliers)

    out = Path(config.out)
    index = np.arange(1, n + 1)
    values_name = "eigs.csv" if config.mode == "eig" else "svd.csv"
    output = RunOutput()
    output.files.append(write_csv(out / values_name, f"spectrum-{config.mode}", {"index": index, "value": report.values}))
    output.files.append(write_csv(out / "symbol.csv", "symbol", {"index": index, "sample": report.symbol_samples}))
    output.metrics = {
        "example": example.name,
        "n": n,
        "mode": config.mode,
        "eps": config.eps_outlier,
        "max_deviation": report.deviation,
        "outliers": report.outliers,
        "circle_center_re": float(np.real(report.circle.center)),
        "circle_center_im": float(np.imag(report.circle.center)),
        "circle_radius": report.circle.radius,
    }
    output.files.append(write_report(out / "report.txt", output.metrics))
    if plot:
        output.files.append(
            write_plot_script(out / "spectrum.gp", values_name, 1, [2], f"{example.name} ({config.mode})")
        )
    return output
