"""
Logarithmic-negativity commands: ``fermion-ln``, ``scalar-ln`` and
``pairs-scan``.

Values come from the generic Fock-space pipeline; the closed forms only
feed the residual columns.
"""

from typing import Annotated

import typer

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR, Statistics
from accel_ent.cli.config import FermionLnFlags, PairsScanFlags, ScalarLnFlags
from accel_ent.cli.shared import (
    emit_table,
    get_settings,
    handle_errors,
    progress,
    resolve_squeezing,
    validate_flags,
)
from accel_ent.curves import fermion_curves, pairs_scan, scalar_curves
from accel_ent.entanglement import Scenario
from accel_ent.utilities import even_grid

FERMION_COLUMNS = {
    Scenario.ONE: (
        "r_f",
        "LN_total",
        "LN_sp",
        "LN_sa",
        "additivity_one",
        "residual_total",
        "residual_sp",
        "residual_sa",
    ),
    Scenario.BOTH: (
        "r_f",
        "LN_total_both",
        "LN_pp",
        "LN_pa",
        "LN_ap",
        "LN_aa",
        "additivity_both",
        "residual_pp",
        "residual_pa",
        "residual_ap",
        "residual_aa",
    ),
}

MassOption = Annotated[
    float | None,
    typer.Option(
        "--mass", "-m", help="Mass (with --accel)", rich_help_panel="Acceleration"
    ),
]
AccelOption = Annotated[
    float | None,
    typer.Option(
        "--accel",
        "-a",
        help="Acceleration (with --mass)",
        rich_help_panel="Acceleration",
    ),
]
GridOption = Annotated[
    int | None,
    typer.Option("--grid", help="Points of a sweep over the full parameter range"),
]
ScenarioOption = Annotated[
    Scenario,
    typer.Option("--scenario", help="Accelerate one mode or both"),
]


def _grid(value: float | None, points: int | None, upper: float) -> list[float] | None:
    if value is not None:
        return [value]
    if points is not None:
        return list(even_grid(0.0, upper, points))
    return None


def fermion_ln_command(
    ctx: typer.Context,
    rf: Annotated[
        float | None,
        typer.Option("--rf", help="Fermion squeezing parameter in [0, pi/2]"),
    ] = None,
    grid: GridOption = None,
    scenario: ScenarioOption = Scenario.ONE,
    mass: MassOption = None,
    accel: AccelOption = None,
) -> None:
    """
    Fermion logarithmic negativities.

    ``one`` prints ``LN_total, LN_sp, LN_sa``; ``both`` prints
    ``LN_pp, LN_pa, LN_ap, LN_aa`` with both modes at the same ``r_f``.
    Without ``--rf``, ``--grid`` or ``--mass/--accel`` the default grid
    over ``[0, pi/2]`` is used.

    Examples
    --------
    >>> accel-ent fermion-ln --rf 0 --scenario one
    """
    config = validate_flags(
        ctx,
        "fermion-ln",
        FermionLnFlags,
        rf={"value": rf, "mass": mass, "accel": accel},
        grid=grid,
        scenario=scenario,
    )
    flags = config.flags
    assert isinstance(flags, FermionLnFlags)

    with handle_errors():
        r_f = resolve_squeezing(flags.rf, Statistics.FERMION, "rf")
        values = _grid(r_f, flags.grid, R_MAX_FERMION)
        progress(ctx, "Computing fermion negativities...")
        table = fermion_curves(values, get_settings(ctx), name="fermion_ln")
        table = table.select(FERMION_COLUMNS[flags.scenario]).with_metadata(
            scenario=flags.scenario.value
        )
    emit_table(ctx, table)


def scalar_ln_command(
    ctx: typer.Context,
    r: Annotated[
        float | None,
        typer.Option("--r", "-r", help="Scalar squeezing parameter in [0, asinh 1]"),
    ] = None,
    grid: GridOption = None,
    pairs: Annotated[
        int | None,
        typer.Option("--pairs", "-M", help="Restrict to at most M produced pairs"),
    ] = None,
    eps: Annotated[
        float,
        typer.Option("--eps", help="Truncation tolerance of the unrestricted series"),
    ] = 1e-12,
    scenario: ScenarioOption = Scenario.ONE,
    mass: MassOption = None,
    accel: AccelOption = None,
) -> None:
    """
    Scalar logarithmic negativities, unrestricted or with at most M pairs.

    Unrestricted runs truncate the out-state series at ``--eps`` and add a
    ``truncation_error`` column that bounds every LN value.

    Examples
    --------
    >>> accel-ent scalar-ln --r 0.88137 --pairs 1
    """
    config = validate_flags(
        ctx,
        "scalar-ln",
        ScalarLnFlags,
        r={"value": r, "mass": mass, "accel": accel},
        grid=grid,
        pairs=pairs,
        eps=eps,
        scenario=scenario,
    )
    flags = config.flags
    assert isinstance(flags, ScalarLnFlags)

    with handle_errors():
        value = resolve_squeezing(flags.r, Statistics.SCALAR, "r")
        values = _grid(value, flags.grid, R_MAX_SCALAR)
        progress(ctx, "Computing scalar negativities...")
        table = scalar_curves(
            values,
            flags.eps,
            flags.pairs,
            flags.scenario,
            get_settings(ctx),
            name="scalar_ln",
        )
    emit_table(ctx, table)


def pairs_scan_command(
    ctx: typer.Context,
    max_m: Annotated[
        int, typer.Option("--max-m", "-K", help="Largest pair limit M")
    ] = 10,
    r: Annotated[
        float,
        typer.Option("--r", "-r", help="Squeezing parameter (asinh 1: a -> infinity)"),
    ] = R_MAX_SCALAR,
) -> None:
    """
    ``LN(rho_{s,p})`` and ``LN(rho_{s,a})`` for ``M = 1..K`` pairs.
    """
    config = validate_flags(ctx, "pairs-scan", PairsScanFlags, max_m=max_m, r=r)
    flags = config.flags
    assert isinstance(flags, PairsScanFlags)

    with handle_errors():
        progress(ctx, f"Scanning M = 1..{flags.max_m}...")
        table = pairs_scan(
            range(1, flags.max_m + 1), flags.r, get_settings(ctx), name="pairs_scan"
        )
    emit_table(ctx, table)
