"""
Shared utilities for the accel-ent CLI.

Console handling, flag validation, error-to-exit-code mapping and table
output used by every subcommand. Diagnostics go to stderr through
``console``; data goes to stdout or to the ``--output`` file.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any, TypeVar

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from accel_ent.bogoliubov import Statistics, r_from_acceleration
from accel_ent.cli.config import AccelerationFlags, CliConfig, FlagModel, GlobalOptions
from accel_ent.curves import CurveTable
from accel_ent.errors import AccelEntError, ParameterDomainError
from accel_ent.settings import NumericSettings

console = Console(stderr=True)

EXIT_USAGE = 2
EXIT_NUMERIC = 3

F = TypeVar("F", bound=FlagModel)

# =============================================================================
# Context access
# =============================================================================


def get_options(ctx: typer.Context) -> GlobalOptions:
    """Global options stored by the main callback (defaults when absent)."""
    if ctx.obj and "options" in ctx.obj:
        return ctx.obj["options"]
    return GlobalOptions()


def get_settings(ctx: typer.Context) -> NumericSettings:
    """Numeric settings stored by the main callback."""
    if ctx.obj and "settings" in ctx.obj:
        return ctx.obj["settings"]
    return NumericSettings(workers=get_options(ctx).workers)


def progress(ctx: typer.Context, message: str) -> None:
    """Print a progress line unless ``--quiet`` is set."""
    if not get_options(ctx).quiet:
        console.print(message)


def warn(message: str) -> None:
    """Print a warning to the diagnostic stream."""
    console.print(f"[yellow]Warning:[/yellow] {escape(message)}")


# =============================================================================
# Validation and errors
# =============================================================================


def validate_flags(
    ctx: typer.Context, subcommand: str, model: type[F], **flags: Any
) -> CliConfig:
    """
    Validate subcommand flags before any computation.

    Parameters
    ----------
    ctx : typer.Context
        Context carrying the global options.
    subcommand : str
        Subcommand name, stored on the returned config.
    model : type[FlagModel]
        Flag schema of the subcommand.
    **flags
        Raw flag values.

    Returns
    -------
    CliConfig
        The validated invocation.

    Raises
    ------
    typer.Exit
        With code 2 when validation fails.
    """
    try:
        validated = model.model_validate(flags)
    except ValidationError as e:
        console.print(f"[red]Error:[/red] invalid options for '{subcommand}'")
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or subcommand
            console.print(f"  {escape(location)}: {escape(error['msg'])}")
        raise typer.Exit(EXIT_USAGE) from e
    return CliConfig(subcommand=subcommand, flags=validated, options=get_options(ctx))


def report_error(e: BaseException) -> None:
    """Print an error headline and its notes."""
    console.print(f"[red]Error:[/red] {escape(str(e))}")
    for note in getattr(e, "__notes__", []):
        console.print(f"  {escape(note)}")


@contextmanager
def handle_errors() -> Iterator[None]:
    """
    Map library exceptions to CLI exit codes.

    ``ParameterDomainError`` and other ``ValueError`` exit with 2; every
    other ``AccelEntError`` (convergence, dimension guard, degenerate
    state) exits with 3.
    """
    try:
        yield
    except ParameterDomainError as e:
        report_error(e)
        raise typer.Exit(EXIT_USAGE) from e
    except AccelEntError as e:
        report_error(e)
        raise typer.Exit(EXIT_NUMERIC) from e
    except ValueError as e:
        report_error(e)
        raise typer.Exit(EXIT_USAGE) from e


# =============================================================================
# Parameters
# =============================================================================


def resolve_squeezing(
    flags: AccelerationFlags, statistics: Statistics, name: str
) -> float | None:
    """
    Squeezing parameter from a direct value or from ``(mass, accel)``.

    A direct value wins over ``(mass, accel)``; giving both prints a
    warning. Returns ``None`` when neither is given.
    """
    if flags.has_direct:
        if flags.has_field:
            warn(f"both --{name} and --mass/--accel given; using --{name}")
        return flags.value
    if flags.has_field:
        assert flags.mass is not None and flags.accel is not None
        return r_from_acceleration(flags.mass, flags.accel, statistics)
    return None


# =============================================================================
# Output
# =============================================================================


def emit_text(ctx: typer.Context, text: str) -> None:
    """Send data text to ``--output`` or stdout."""
    output = get_options(ctx).output
    if output is None:
        typer.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text)
    progress(ctx, f"Wrote [cyan]{escape(str(output))}[/cyan]")


def emit_table(ctx: typer.Context, table: CurveTable) -> None:
    """Render ``table`` in the selected format and emit it."""
    options = get_options(ctx)
    if options.output is not None and Path(options.output).is_dir():
        path = table.write(options.output, options.format)
        progress(ctx, f"Wrote [cyan]{escape(str(path))}[/cyan]")
        return
    emit_text(ctx, table.render(options.format))


__all__ = [
    "EXIT_NUMERIC",
    "EXIT_USAGE",
    "console",
    "emit_table",
    "emit_text",
    "get_options",
    "get_settings",
    "handle_errors",
    "progress",
    "report_error",
    "resolve_squeezing",
    "validate_flags",
    "warn",
]
