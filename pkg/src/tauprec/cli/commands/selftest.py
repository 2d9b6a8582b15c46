"""Dense-oracle self test."""
from typing import List, Optional

import typer
from rich.console import Console
from rich.table import Table

from tauprec.bench.oracles import ORACLES, run_selftest
from tauprec.cli.commands.constants import EXIT_NUMERICAL, EXIT_USAGE
from tauprec.cli.commands.helper import is_verbose, verbose_print
from tauprec.logger import configure_logging

console = Console()


def selftest(
    ctx: typer.Context,
    only: Optional[List[str]] = typer.Option(None, "--only", help="Run only these checks (repeatable)"),
    seed: int = typer.Option(0, "--seed", help="Seed of the random operands"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show detailed output"),
) -> None:
    """
    Check the structured solvers against dense oracles.

    Exits with code 1 when a check fails.
    """
    verbose = is_verbose(ctx, verbose)
    configure_logging(verbose)
    unknown = sorted(set(only or ()) - set(ORACLES))
    if unknown:
        console.print(f"[bold red]Error: unknown checks {', '.join(unknown)}[/bold red]")
        raise typer.Exit(code=EXIT_USAGE)

    verbose_print(f"[dim]Checks: {', '.join(only or ORACLES)} (seed {seed})[/dim]", verbose)
    with console.status("[bold blue]Running the dense oracles...[/bold blue]", spinner="dots"):
        results = run_selftest(seed=seed, names=only or None)

    table = Table(title="tauprec selftest")
    table.add_column("check", style="cyan")
    table.add_column("error", justify="right")
    table.add_column("tol", justify="right")
    table.add_column("status")
    for result in results:
        status = "[green]ok[/green]" if result.passed else f"[red]FAILED[/red] {result.message}"
        table.add_row(result.name, f"{result.error:.2e}", f"{result.tol:.0e}", status)
    console.print(table)

    failed = [r.name for r in results if not r.passed]
    if failed:
        console.print(f"[bold red]Error: {len(failed)} check(s) failed[/bold red]")
        raise typer.Exit(code=EXIT_NUMERICAL)
    console.print(f"\n✅ [bold green]All {len(results)} checks passed[/bold green]")
