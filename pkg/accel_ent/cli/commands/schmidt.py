"""
Schmidt number command for two-body packet states.
"""

from typing import Annotated

import typer

from accel_ent.cli.config import SchmidtFlags
from accel_ent.cli.shared import (
    emit_table,
    get_settings,
    handle_errors,
    progress,
    validate_flags,
)
from accel_ent.curves import schmidt_curve
from accel_ent.utilities import even_grid


def schmidt_command(
    ctx: typer.Context,
    vtilde: Annotated[
        float | None,
        typer.Option("--vtilde", "-v", help="Dimensionless relative velocity"),
    ] = None,
    grid: Annotated[
        int | None,
        typer.Option("--grid", help="Points of a v_tilde sweep on [0.04, 4]"),
    ] = None,
    a1: Annotated[
        float, typer.Option("--a1", help="Acceleration of coordinate x")
    ] = -0.5,
    a2: Annotated[
        float, typer.Option("--a2", help="Acceleration of coordinate y")
    ] = 0.5,
    time: Annotated[
        float, typer.Option("--time", "-t", help="Time of the accelerated check")
    ] = 15.0,
) -> None:
    """
    Schmidt numbers ``K+`` and ``K-``: closed form against quadrature.

    Each row also recomputes ``K+`` for packets accelerated at ``(a1, a2)``
    after ``time``, which leaves the Schmidt number unchanged.
    """
    config = validate_flags(
        ctx,
        "schmidt",
        SchmidtFlags,
        vtilde=vtilde,
        grid=grid,
        a1=a1,
        a2=a2,
        time=time,
    )
    flags = config.flags
    assert isinstance(flags, SchmidtFlags)
    settings = get_settings(ctx)

    values = None
    if flags.vtilde is not None:
        values = [flags.vtilde]
    elif flags.grid is not None:
        values = list(even_grid(0.04, 4.0, flags.grid))

    progress(ctx, "Integrating packet overlaps...")
    with handle_errors():
        table = schmidt_curve(
            values, settings, (flags.a1, flags.a2), flags.time, name="schmidt"
        )
    emit_table(ctx, table)
