"""
Figure commands: write every figure table, or one of them.
"""

from pathlib import Path
from typing import Annotated

import typer
from rich.markup import escape

from accel_ent.cli.config import FiguresFlags
from accel_ent.cli.shared import (
    console,
    emit_table,
    get_options,
    get_settings,
    handle_errors,
    progress,
    validate_flags,
)
from accel_ent.curves import FIGURES, build_figure, write_figures
from accel_ent.settings import OUTPUT_DIR_ENV, default_output_dir

figures_app = typer.Typer(
    no_args_is_help=True, help="Reproduce the figure tables (bfacc, enb_1, ...)"
)


@figures_app.command(name="all")
def figures_all_command(
    ctx: typer.Context,
    out: Annotated[
        Path | None,
        typer.Option(
            "--out",
            "-o",
            help="Output directory (default: figures/)",
            envvar=OUTPUT_DIR_ENV,
        ),
    ] = None,
    only: Annotated[
        list[str] | None,
        typer.Option("--only", help="Restrict to these figure ids (repeatable)"),
    ] = None,
) -> None:
    """
    Write ``<figure-id>.csv`` (or ``.json``) for every figure into ``--out``.
    """
    config = validate_flags(
        ctx,
        "figures all",
        FiguresFlags,
        out=out if out is not None else default_output_dir(),
        only=tuple(only or ()),
    )
    flags = config.flags
    assert isinstance(flags, FiguresFlags)
    options = get_options(ctx)

    def written(path: Path) -> None:
        progress(ctx, f"  [green]✓[/green] {escape(str(path))}")

    progress(ctx, f"Writing figure tables to [cyan]{escape(str(flags.out))}[/cyan]...")
    with handle_errors():
        paths = write_figures(
            flags.out,
            options.format,
            get_settings(ctx),
            flags.only or None,
            on_written=written,
        )
    progress(ctx, f"[green]✓[/green] {len(paths)} tables written")


@figures_app.command(name="show")
def figures_show_command(
    ctx: typer.Context,
    figure_id: Annotated[str, typer.Argument(help="Figure id, e.g. nop_tp")],
) -> None:
    """Print one figure table to stdout (or ``--output``)."""
    with handle_errors():
        table = build_figure(figure_id, get_settings(ctx))
    emit_table(ctx, table)


@figures_app.command(name="list")
def figures_list_command() -> None:
    """List the figure ids."""
    for figure_id in FIGURES:
        typer.echo(figure_id)
    console.print(f"{len(FIGURES)} figures")
