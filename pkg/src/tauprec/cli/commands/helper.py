"""Helper functions for CLI commands."""
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import typer
from rich.console import Console
from rich.table import Table

from tauprec.cli.commands.constants import EXIT_NUMERICAL, EXIT_USAGE
from tauprec.config import RunConfig, load_config
from tauprec.exceptions import ConfigError, TauprecError
from tauprec.logger import configure_logging
from tauprec.report_writer import RunOutput


def verbose_message(message: str, verbose: bool, print_func: Callable) -> None:
    """Print a message if verbose is enabled.

    Args:
        message (str): The message to print.
        verbose (bool): Flag indicating if verbose mode is enabled.
        print_func (Callable): The print function to use
            (e.g., console.print or console.log).
    """
    if verbose:
        print_func(message)


def verbose_print(message: str, verbose: bool):
    """Print a message if verbose is enabled.

    Args:
        message (str): The message to print.
        verbose (bool): Flag indicating if verbose mode is enabled.
    """
    verbose_message(message, verbose, Console().print)


def verbose_log(message: str, verbose: bool):
    """Print a log message if verbose is enabled.

    Args:
        message (str): The message to log.
        verbose (bool): Flag indicating if verbose mode is enabled.
    """
    verbose_message(message, verbose, Console().log)


def is_verbose(ctx: Optional[typer.Context], verbose: bool) -> bool:
    """Command-level ``--verbose`` or the one given before the command."""
    obj = getattr(ctx, "obj", None) or {}
    return bool(verbose or obj.get("verbose", False))


def load_run_config(
    console: Console,
    experiment: str,
    config_path: Optional[Path],
    overrides: Dict[str, Any],
    verbose: bool = False,
) -> RunConfig:
    """Read the config file, apply overrides and set up logging.

    Exits with code 2 when the configuration cannot be read.

    Args:
        console (Console): Console of the calling command.
        experiment (str): Command name, stored in the config.
        config_path (Optional[Path]): key=value file.
        overrides (Dict[str, Any]): Command-line values; ``None`` means unset.
        verbose (bool, optional): Debug logging. Defaults to False.

    Returns:
        RunConfig: The configuration.
    """
    configure_logging(verbose)
    try:
        config = load_config(config_path, {"experiment": experiment, **overrides})
    except ConfigError as exc:
        console.print(f"[bold red]Error: {exc}[/bold red]")
        raise typer.Exit(code=EXIT_USAGE)
    verbose_log(f"[dim]Configuration: {config.as_dict()}[/dim]", verbose)
    return config


def print_plan(console: Console, config: RunConfig, keys) -> None:
    """Show what a run would do without doing it."""
    table = Table(title=f"Plan for {config.experiment}")
    table.add_column("key", style="cyan")
    table.add_column("value")
    values = config.as_dict()
    for key in ("out", *keys):
        table.add_row(key, str(values[key]))
    console.print(table)
    console.print("\n[yellow]Dry run completed. No files were created.[/yellow]")


def execute(
    console: Console,
    title: str,
    runner: Callable[..., RunOutput],
    config: RunConfig,
    **kwargs,
) -> RunOutput:
    """Run an experiment under a spinner and report the written files.

    A :class:`~tauprec.exceptions.ConfigError` exits with code 2, any other
    :class:`~tauprec.exceptions.TauprecError` with code 1.
    """
    try:
        with console.status(f"[bold blue]{title}...[/bold blue]", spinner="dots"):
            output = runner(config, **kwargs)
    except ConfigError as exc:
        console.print(f"[bold red]Error: {exc}[/bold red]")
        raise typer.Exit(code=EXIT_USAGE)
    except TauprecError as exc:
        console.print(f"[bold red]Error: {exc}[/bold red]")
        raise typer.Exit(code=EXIT_NUMERICAL)

    for path in output.files:
        console.print(f"[dim]{path}[/dim]")
    for key, value in output.metrics.items():
        console.print(f"  {key} = {value}")
    console.print(f"\n✅ [bold green]Results written to {config.out}/[/bold green]")
    return output
