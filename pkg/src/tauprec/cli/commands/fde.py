"""Iteration and condition-number tables of the fractional diffusion problems."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from tauprec.bench.fde_tables import run_fde1d, run_fde2d
from tauprec.cli.commands.constants import FDE1D_KEYS, FDE2D_KEYS
from tauprec.cli.commands.helper import execute, is_verbose, load_run_config, print_plan

console = Console()

SIZE_HELP = "Comma-separated interior sizes"
PRECOND_HELP = (
    "Comma-separated preconditioners: identity, circulant, full-symbol, tau-symbol, "
    "tau-symbol-hat, alt-symbol, tridiagonal (default: all available)"
)


def fde1d(
    ctx: typer.Context,
    size: Optional[str] = typer.Option(None, "--size", "-n", help=f"{SIZE_HELP} (default: 63,127,255,511)"),
    alpha: Optional[str] = typer.Option(None, "--alpha", "-a", help="Comma-separated orders (default: 1.2,1.5,1.8)"),
    precond: Optional[str] = typer.Option(None, "--precond", "-p", help=PRECOND_HELP),
    tol: Optional[float] = typer.Option(None, "--tol", help="GMRES tolerance (default: 1e-7)"),
    spectra: Optional[bool] = typer.Option(None, "--spectra/--no-spectra", help="Write scaled spectra"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker threads"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key=value config file"),
    dry_run: bool = typer.Option(False, "--dry-run", help="Show the plan without computing"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Solve the 1D bench problem for every order, size and preconditioner.

    Examples:
        tauprec fde1d --alpha 1.5 --size 63,127 --precond tau-symbol,tridiagonal
    """
    verbose = is_verbose(ctx, verbose)
    overrides = {
        "sizes": size,
        "alphas": alpha,
        "precond": precond,
        "tol": tol,
        "spectra": spectra,
        "workers": workers,
        "out": out,
    }
    run_config = load_run_config(console, "fde1d", config, overrides, verbose)
    if dry_run:
        print_plan(console, run_config, FDE1D_KEYS)
        return
    execute(console, "Solving the 1D problems", run_fde1d, run_config)


def fde2d(
    ctx: typer.Context,
    example: Optional[str] = typer.Option(None, "--example", "-e", help="2 (beta=1.6) or 3 (beta=1.2)"),
    size: Optional[str] = typer.Option(None, "--size", "-n", help=f"{SIZE_HELP} per direction (default: 16,32)"),
    alpha: Optional[str] = typer.Option(None, "--alpha", "-a", help="Comma-separated orders in x (default: 1.8)"),
    beta: Optional[float] = typer.Option(None, "--beta", "-b", help="Order in y (overrides the example)"),
    precond: Optional[str] = typer.Option(None, "--precond", "-p", help="identity, tau-symbol, tau-symbol-hat"),
    tol: Optional[float] = typer.Option(None, "--tol", help="GMRES tolerance (default: 1e-7)"),
    spectra: Optional[bool] = typer.Option(None, "--spectra/--no-spectra", help="Write scaled spectra"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker threads"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key=value config file"),
    dry_run: bool = typer.Option(False, "--dry-run", help="Show the plan without computing"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Solve the 2D bench problem with Crank-Nicolson and preconditioned GMRES.

    Examples:
        tauprec fde2d --example 3 --size 16,32
    """
    verbose = is_verbose(ctx, verbose)
    overrides = {
        "example": example,
        "sizes": size,
        "alphas": alpha,
        "beta": beta,
        "precond": precond,
        "tol": tol,
        "spectra": spectra,
        "workers": workers,
        "out": out,
    }
    run_config = load_run_config(console, "fde2d", config, overrides, verbose)
    if dry_run:
        print_plan(console, run_config, FDE2D_KEYS)
        return
    execute(console, "Solving the 2D problems", run_fde2d, run_config)
