"""Command-line interface of the structured-matrix toolkit."""

from typing import Optional

import typer
from typing_extensions import Annotated

from tauprec import __version__
from tauprec.cli.commands.fde import fde1d, fde2d
from tauprec.cli.commands.precond_compare import precond_compare
from tauprec.cli.commands.put_pia import put_pia
from tauprec.cli.commands.selftest import selftest
from tauprec.cli.commands.spectrum import spectrum

app = typer.Typer(help="Circulant and tau preconditioning experiments")

app.command("spectrum")(spectrum)
app.command("precond-compare")(precond_compare)
app.command("fde1d")(fde1d)
app.command("fde2d")(fde2d)
app.command("put-pia")(put_pia)
app.command("selftest")(selftest)


def _version_cb(v: bool):
    if v:
        typer.echo(f"tauprec {__version__}")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: Annotated[
        Optional[bool],
        typer.Option(
            "--version",
            "-v",
            help="Show version and exit.",
            callback=_version_cb,
            is_eager=True,
        ),
    ] = None,
    verbose: Annotated[
        bool, typer.Option("--verbose", help="Enable verbose output.")
    ] = False,
):
    """Entry point for the CLI.

    Args:
        ctx (typer.Context): The context object for the CLI.
        version (Annotated[ Optional[bool], typer.Option, optional): Show version.
        verbose (Annotated[ bool, typer.Option, optional): Enable verbose output.
    """

    ctx.obj = {"verbose": verbose}
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())


if __name__ == "__main__":
    app()
