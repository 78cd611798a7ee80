#!/usr/bin/env python3
"""
accel-ent CLI - Main application with global output configuration.

The top-level callback captures the output format, output path, worker
count and verbosity; subcommands read them from the context.
"""

from collections.abc import Sequence
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError

from accel_ent.cli.commands.bogoliubov import bogoliubov_command
from accel_ent.cli.commands.dump_state import dump_state_command
from accel_ent.cli.commands.figures import figures_app
from accel_ent.cli.commands.negativity_commands import (
    fermion_ln_command,
    pairs_scan_command,
    scalar_ln_command,
)
from accel_ent.cli.commands.packet import packet_command
from accel_ent.cli.commands.schmidt import schmidt_command
from accel_ent.cli.commands.spectrum import spectrum_command
from accel_ent.cli.commands.sweep import sweep_command
from accel_ent.cli.config import GlobalOptions
from accel_ent.cli.shared import EXIT_USAGE, console
from accel_ent.curves import OutputFormat
from accel_ent.settings import NumericSettings

app = typer.Typer(
    no_args_is_help=True,
    help="accel-ent - Entanglement of accelerated particle pairs",
)


@app.callback()
def main(
    ctx: typer.Context,
    output_format: Annotated[
        OutputFormat,
        typer.Option(
            "--format",
            "-f",
            help="Table format",
            rich_help_panel="Output",
        ),
    ] = OutputFormat.CSV,
    output: Annotated[
        Path | None,
        typer.Option(
            "--output",
            "-o",
            help="Write data to this file (or directory) instead of stdout",
            rich_help_panel="Output",
        ),
    ] = None,
    quiet: Annotated[
        bool,
        typer.Option(
            "--quiet", "-q", help="Suppress progress lines", rich_help_panel="Output"
        ),
    ] = False,
    workers: Annotated[
        int,
        typer.Option(
            "--workers",
            "-j",
            help="Threads used to compute sweep rows",
            rich_help_panel="Computation",
        ),
    ] = 1,
) -> None:
    """
    accel-ent - Configure output and computation globally.

    Settings are stored in the context for the subcommands.
    """
    ctx.ensure_object(dict)
    try:
        options = GlobalOptions(
            format=output_format, output=output, workers=workers, quiet=quiet
        )
    except ValidationError as e:
        for error in e.errors():
            console.print(f"[red]Error:[/red] --{error['loc'][0]}: {error['msg']}")
        raise typer.Exit(EXIT_USAGE) from e

    ctx.obj["options"] = options
    ctx.obj["settings"] = NumericSettings(workers=options.workers)


app.command(name="bogoliubov")(bogoliubov_command)
app.command(name="spectrum")(spectrum_command)
app.command(name="schmidt")(schmidt_command)
app.command(name="packet")(packet_command)
app.command(name="fermion-ln")(fermion_ln_command)
app.command(name="scalar-ln")(scalar_ln_command)
app.command(name="pairs-scan")(pairs_scan_command)
app.command(name="dump-state")(dump_state_command)
app.command(name="sweep")(sweep_command)
app.add_typer(figures_app, name="figures")


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI on ``argv`` and return its exit code instead of exiting.

    Examples
    --------
    >>> run(["figures", "list"])  # doctest: +SKIP
    0
    """
    try:
        app(args=list(argv) if argv is not None else None, prog_name="accel-ent")
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0


__all__ = ["app", "main", "run"]


if __name__ == "__main__":
    app()
