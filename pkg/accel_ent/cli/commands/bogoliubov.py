"""
Bogoliubov coefficient command.

Prints ``mu2``, the coefficient moduli, the squeezing parameter and the
mean pair occupation of a mode of mass ``m`` accelerated at ``a``.
"""

from typing import Annotated

import typer

from accel_ent.bogoliubov import (
    Statistics,
    fermion_coefficients,
    mu_squared_from_acceleration,
    pair_occupation,
    scalar_coefficients,
)
from accel_ent.cli.config import BogoliubovFlags
from accel_ent.cli.shared import emit_table, handle_errors, validate_flags
from accel_ent.curves import CurveTable


def bogoliubov_command(
    ctx: typer.Context,
    mass: Annotated[float, typer.Option("--mass", "-m", help="Particle mass")],
    accel: Annotated[
        float, typer.Option("--accel", "-a", help="Classical acceleration")
    ],
    stats: Annotated[
        Statistics,
        typer.Option("--stats", "-s", help="Particle statistics"),
    ] = Statistics.SCALAR,
) -> None:
    """
    Bogoliubov coefficients of an accelerated charged mode.

    Examples
    --------
    >>> accel-ent bogoliubov --mass 1 --accel 1 --stats fermion
    """
    config = validate_flags(
        ctx, "bogoliubov", BogoliubovFlags, mass=mass, accel=accel, stats=stats
    )
    flags = config.flags
    assert isinstance(flags, BogoliubovFlags)

    with handle_errors():
        mu2 = mu_squared_from_acceleration(flags.mass, flags.accel)
        if flags.stats is Statistics.FERMION:
            fermion = fermion_coefficients(mu2)
            alpha, beta, r = fermion.alpha_mod, fermion.beta_mod, fermion.r_f
            residual = fermion.unitarity_residual
        else:
            scalar = scalar_coefficients(mu2)
            alpha, beta, r = scalar.alpha_mod, scalar.beta_mod, scalar.r
            residual = scalar.unitarity_residual
        table = CurveTable.from_records(
            "bogoliubov",
            [
                {
                    "m": flags.mass,
                    "a": flags.accel,
                    "mu2": mu2,
                    "alpha_mod": alpha,
                    "beta_mod": beta,
                    "r": r,
                    "pair_occupation": pair_occupation(r, flags.stats),
                    "unitarity_residual": residual,
                }
            ],
            {"statistics": flags.stats.value},
        )
    emit_table(ctx, table)
