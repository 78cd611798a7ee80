"""
Sweep command: run a YAML sweep definition.
"""

from pathlib import Path
from typing import Annotated

import typer
from rich.markup import escape

from accel_ent.cli.config import SweepFlags
from accel_ent.cli.shared import (
    console,
    emit_table,
    get_settings,
    handle_errors,
    progress,
    validate_flags,
)
from accel_ent.curves import load_sweep, run_sweep


def sweep_command(
    ctx: typer.Context,
    file: Annotated[
        Path,
        typer.Argument(help="Sweep definition, e.g. data/sweeps/pairs_scan.yaml"),
    ],
) -> None:
    """Tabulate the sweep described by a YAML file."""
    config = validate_flags(ctx, "sweep", SweepFlags, file=file)
    flags = config.flags
    assert isinstance(flags, SweepFlags)

    if not flags.file.exists():
        console.print(f"[red]Error:[/red] File not found: {escape(str(flags.file))}")
        raise typer.Exit(2)

    with handle_errors():
        spec = load_sweep(flags.file)
        progress(
            ctx,
            f"Running [cyan]{escape(spec.name)}[/cyan] "
            f"({spec.kind.value}, {len(spec.grid)} points)...",
        )
        table = run_sweep(spec, get_settings(ctx))
    emit_table(ctx, table)
