"""
Dump-state command: the out-basis amplitude table of a Bell state.
"""

from typing import Annotated

import typer

from accel_ent.cli.config import DumpStateFlags
from accel_ent.cli.shared import (
    emit_table,
    emit_text,
    get_options,
    handle_errors,
    progress,
    validate_flags,
)
from accel_ent.curves import CurveTable, OutputFormat
from accel_ent.fock import FockVector, StateDump, StateSpec, build_bell_out


def state_table(state: FockVector, name: str = "state") -> CurveTable:
    """Amplitude table with one occupation column per slot."""
    columns = (*(f"n_{slot}" for slot in state.slots), "amplitude")
    rows = tuple((*occ, amp) for occ, amp in state.records())
    return CurveTable(
        name=name,
        columns=columns,
        rows=rows,
        metadata={
            "statistics": state.statistics.value,
            "truncation_tail": repr(state.truncation_tail),
            "negativity_error": repr(state.negativity_error),
            "cutoff": str(state.cutoff),
        },
    )


def dump_state_command(
    ctx: typer.Context,
    spec: Annotated[
        str,
        typer.Option(
            "--spec",
            help="Mode omega: inertial, fermion:<r_f>, scalar:<r>[:<eps>], "
            "restricted:<r>:<M>",
        ),
    ],
    spec_s: Annotated[
        str, typer.Option("--spec-s", help="Mode s, same syntax as --spec")
    ] = "inertial",
) -> None:
    """
    Print the out-basis expansion of ``(|0>_s|0>_w + |1>_s|1>_w)/sqrt(2)``.

    JSON output lists ``{occupations, amplitude}`` records; CSV output has
    one occupation column per slot.

    Examples
    --------
    >>> accel-ent --format json dump-state --spec fermion:0.5
    """
    config = validate_flags(
        ctx, "dump-state", DumpStateFlags, spec=spec, spec_s=spec_s
    )
    flags = config.flags
    assert isinstance(flags, DumpStateFlags)

    with handle_errors():
        spec_omega = StateSpec.parse(flags.spec)
        spec_first = StateSpec.parse(flags.spec_s)
        state = build_bell_out(spec_first, spec_omega)
    progress(ctx, f"{len(state)} amplitudes, tail {state.truncation_tail:.3e}")

    if get_options(ctx).format is OutputFormat.JSON:
        emit_text(ctx, StateDump.from_state(state).to_json() + "\n")
    else:
        emit_table(ctx, state_table(state))
