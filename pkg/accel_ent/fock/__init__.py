"""Out-basis Fock-state expansions and two-mode Bell states."""

from accel_ent.fock.bell import bell_statistics, build_bell_out
from accel_ent.fock.expansions import (
    fermion_out_one,
    fermion_out_vacuum,
    negativity_error_constant,
    one_particle_cutoff,
    one_particle_tail,
    restriction_params,
    scalar_out_one,
    scalar_out_vacuum,
    scalar_restricted_one,
    scalar_restricted_vacuum,
    truncation_cutoff,
    vacuum_tail,
)
from accel_ent.fock.export import AmplitudeRecord, StateDump
from accel_ent.fock.fock_types import (
    SLOTS,
    FockVector,
    Mode,
    RestrictionParams,
    SlotLabel,
    SpecKind,
    Species,
    StateSpec,
    mode_slots,
)

__all__ = [
    "SLOTS",
    "AmplitudeRecord",
    "FockVector",
    "Mode",
    "RestrictionParams",
    "SlotLabel",
    "SpecKind",
    "Species",
    "StateDump",
    "StateSpec",
    "bell_statistics",
    "build_bell_out",
    "fermion_out_one",
    "fermion_out_vacuum",
    "mode_slots",
    "negativity_error_constant",
    "one_particle_cutoff",
    "one_particle_tail",
    "restriction_params",
    "scalar_out_one",
    "scalar_out_vacuum",
    "scalar_restricted_one",
    "scalar_restricted_vacuum",
    "truncation_cutoff",
    "vacuum_tail",
]
