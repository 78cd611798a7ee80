"""
Packet command: ``|Psi(x, y, t)|`` of the two-body state on a grid.
"""

from typing import Annotated

import typer

from accel_ent.cli.config import PacketFlags
from accel_ent.cli.shared import emit_table, get_settings, handle_errors, validate_flags
from accel_ent.curves import packet_grid
from accel_ent.packets import TwoBodyParams


def packet_command(
    ctx: typer.Context,
    mass: Annotated[
        float,
        typer.Option("--mass", "-m", help="Mass", rich_help_panel="Packet"),
    ] = 1.0,
    b: Annotated[
        float,
        typer.Option("--b", help="Squared width at t=0", rich_help_panel="Packet"),
    ] = 1.0,
    x0: Annotated[
        float,
        typer.Option("--x0", help="Initial center", rich_help_panel="Packet"),
    ] = 0.0,
    v1: Annotated[
        float, typer.Option("--v1", help="First velocity", rich_help_panel="Motion")
    ] = -1.0,
    v2: Annotated[
        float, typer.Option("--v2", help="Second velocity", rich_help_panel="Motion")
    ] = 1.0,
    a1: Annotated[
        float,
        typer.Option("--a1", help="Acceleration of x", rich_help_panel="Motion"),
    ] = -0.5,
    a2: Annotated[
        float,
        typer.Option("--a2", help="Acceleration of y", rich_help_panel="Motion"),
    ] = 0.5,
    sign: Annotated[
        str,
        typer.Option("--sign", help="Relative sign: + or -", rich_help_panel="Motion"),
    ] = "+",
    time: Annotated[float, typer.Option("--time", "-t", help="Time")] = 15.0,
    grid: Annotated[int, typer.Option("--grid", help="Points per axis")] = 61,
) -> None:
    """
    Tabulate ``|Psi|`` of the two-body packet state at one time.

    Columns are ``t, x, y, abs_psi`` with ``y`` varying fastest; each axis
    covers the packet centers plus eight widths.
    """
    config = validate_flags(
        ctx,
        "packet",
        PacketFlags,
        mass=mass,
        b=b,
        x0=x0,
        v1=v1,
        v2=v2,
        a1=a1,
        a2=a2,
        sign=sign,
        time=time,
        grid=grid,
    )
    flags = config.flags
    assert isinstance(flags, PacketFlags)

    with handle_errors():
        params = TwoBodyParams(
            m=flags.mass,
            b=flags.b,
            x0=flags.x0,
            v1=flags.v1,
            v2=flags.v2,
            a1=flags.a1,
            a2=flags.a2,
            sign=flags.sign,
        )
        table = packet_grid(
            params, flags.time, flags.grid, get_settings(ctx), name="packet"
        )
    emit_table(ctx, table)
