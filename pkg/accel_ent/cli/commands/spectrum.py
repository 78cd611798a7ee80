"""
Spectrum command: accelerated-particle spectrum against the Unruh spectrum.
"""

from typing import Annotated

import typer

from accel_ent.cli.config import SpectrumFlags
from accel_ent.cli.shared import (
    emit_table,
    get_settings,
    handle_errors,
    progress,
    validate_flags,
)
from accel_ent.curves import spectra_curve
from accel_ent.utilities import even_grid


def spectrum_command(
    ctx: typer.Context,
    mass: Annotated[float, typer.Option("--mass", "-m", help="Particle mass")] = 1.0,
    omega: Annotated[
        float, typer.Option("--omega", "-w", help="Detector frequency")
    ] = 1.0,
    accel: Annotated[
        float | None,
        typer.Option("--accel", "-a", help="Acceleration (omit to sweep)"),
    ] = None,
    grid: Annotated[
        int | None,
        typer.Option("--grid", help="Points of the acceleration sweep on [0.1, 10]"),
    ] = None,
) -> None:
    """
    Compare ``exp(-pi m/a)`` with ``1/(exp(2 pi omega/a) - 1)``.

    With ``--accel`` a single row is printed; otherwise the spectra are
    swept over accelerations in ``[0.1, 10]``.
    """
    config = validate_flags(
        ctx, "spectrum", SpectrumFlags, mass=mass, omega=omega, accel=accel, grid=grid
    )
    flags = config.flags
    assert isinstance(flags, SpectrumFlags)
    settings = get_settings(ctx)

    if flags.accel is not None:
        accelerations = [flags.accel]
    else:
        accelerations = list(
            even_grid(0.1, 10.0, flags.grid or settings.grid_points)
        )

    with handle_errors():
        table = spectra_curve(
            accelerations, flags.mass, flags.omega, settings, name="spectrum"
        )
    progress(
        ctx,
        f"accelerated: {table.metadata['accelerated_form']}   "
        f"unruh: {table.metadata['unruh_form']}",
    )
    emit_table(ctx, table)
