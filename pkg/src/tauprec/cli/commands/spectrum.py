"""Spectrum of a structured matrix function against its symbol."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from tauprec.bench.spectrum import run_spectrum
from tauprec.cli.commands.constants import SPECTRUM_KEYS
from tauprec.cli.commands.helper import execute, is_verbose, load_run_config, print_plan

console = Console()


def spectrum(
    ctx: typer.Context,
    example: Optional[str] = typer.Option(
        None, "--example", "-e", help="sin, log, poly or finance (or 1-4). Default: poly"
    ),
    mode: Optional[str] = typer.Option(
        None, "--mode", "-m", help="eig: Y_n h(T_n(f)) eigenvalues; svd: h(T_n(f)) singular values"
    ),
    size: Optional[int] = typer.Option(None, "--size", "-n", help="Matrix size (default: per example)"),
    eps: Optional[float] = typer.Option(None, "--eps", help="Outlier threshold (default: 0.5)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the enclosing-circle shuffle"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key=value config file"),
    plot: bool = typer.Option(False, "--plot", help="Also write a gnuplot script"),
    dry_run: bool = typer.Option(False, "--dry-run", help="Show the plan without computing"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Compare the sorted spectrum of a matrix function with its symbol.

    Examples:
        tauprec spectrum --example poly --size 200
        tauprec spectrum -e finance -m svd
    """
    verbose = is_verbose(ctx, verbose)
    overrides = {
        "example": example,
        "mode": mode,
        "sizes": (size,) if size is not None else None,
        "eps_outlier": eps,
        "seed": seed,
        "out": out,
    }
    run_config = load_run_config(console, "spectrum", config, overrides, verbose)
    if dry_run:
        print_plan(console, run_config, SPECTRUM_KEYS)
        return
    execute(console, "Computing the spectrum", run_spectrum, run_config, plot=plot)
