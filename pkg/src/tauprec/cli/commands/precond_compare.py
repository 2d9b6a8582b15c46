"""MINRES with the two absolute-value circulant preconditioners."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from tauprec.bench.precond_compare import run_precond_compare
from tauprec.cli.commands.constants import PRECOND_KEYS
from tauprec.cli.commands.helper import execute, is_verbose, load_run_config, print_plan

console = Console()


def precond_compare(
    ctx: typer.Context,
    example: Optional[str] = typer.Option(None, "--example", "-e", help="Spectrum example (default: poly)"),
    size: Optional[int] = typer.Option(None, "--size", "-n", help="Matrix size (default: 512 for poly)"),
    tol: Optional[float] = typer.Option(None, "--tol", help="MINRES tolerance (default: 1e-7)"),
    maxit: Optional[int] = typer.Option(None, "--maxit", help="MINRES iteration cap"),
    eps: Optional[float] = typer.Option(None, "--eps", help="Cluster radius around -1 and 1 (default: 0.1)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the right-hand side"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key=value config file"),
    plot: bool = typer.Option(False, "--plot", help="Also write a gnuplot script"),
    dry_run: bool = typer.Option(False, "--dry-run", help="Show the plan without computing"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Count MINRES iterations and clustered eigenvalues for each preconditioner.

    Examples:
        tauprec precond-compare --size 512
    """
    verbose = is_verbose(ctx, verbose)
    overrides = {
        "example": example,
        "sizes": (size,) if size is not None else None,
        "tol": tol,
        "maxit": maxit,
        "eps_cluster": eps,
        "seed": seed,
        "out": out,
    }
    run_config = load_run_config(console, "precond-compare", config, overrides, verbose)
    if dry_run:
        print_plan(console, run_config, PRECOND_KEYS)
        return
    execute(console, "Running MINRES", run_precond_compare, run_config, plot=plot)
