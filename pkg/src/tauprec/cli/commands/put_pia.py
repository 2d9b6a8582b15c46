"""Exercise boundary of the American put by policy iteration."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from tauprec.bench.put_tables import run_put_pia
from tauprec.cli.commands.constants import PUT_KEYS
from tauprec.cli.commands.helper import execute, is_verbose, load_run_config, print_plan

console = Console()


def put_pia(
    ctx: typer.Context,
    horizon: Optional[float] = typer.Option(None, "--horizon", "-T", help="Time to expiry in years (default: 1)"),
    dx: Optional[float] = typer.Option(None, "--dx", help="Asset step (default: 0.05)"),
    dt: Optional[float] = typer.Option(None, "--dt", help="Time step (default: dx^2)"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Policy iteration tolerance (default: 1e-4)"),
    adjusted: Optional[bool] = typer.Option(
        None, "--brennan-schwartz/--no-brennan-schwartz", help="Add the Brennan-Schwartz columns"
    ),
    mc: Optional[bool] = typer.Option(None, "--mc/--no-mc", help="Add the Monte Carlo table"),
    paths: Optional[int] = typer.Option(None, "--paths", help="Monte Carlo paths (default: 100000)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Monte Carlo seed"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Monte Carlo threads"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="key=value config file"),
    plot: bool = typer.Option(False, "--plot", help="Also write a gnuplot script"),
    dry_run: bool = typer.Option(False, "--dry-run", help="Show the plan without computing"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Compute the exercise boundary, its trace and the optional simulation check.

    Examples:
        tauprec put-pia --dx 0.05 --dt 0.0025
        tauprec put-pia --horizon 10 --no-brennan-schwartz
        tauprec put-pia --mc --paths 100000
    """
    verbose = is_verbose(ctx, verbose)
    overrides = {
        "horizon": horizon,
        "dx": dx,
        "dt": dt,
        "pia_tol": tol,
        "adjusted": adjusted,
        "mc": mc,
        "paths": paths,
        "seed": seed,
        "workers": workers,
        "out": out,
    }
    run_config = load_run_config(console, "put-pia", config, overrides, verbose)
    if dry_run:
        print_plan(console, run_config, PUT_KEYS)
        return
    execute(console, "Iterating on the exercise policy", run_put_pia, run_config, plot=plot)
