"""
accel-ent package.

Entanglement of particle pairs under uniform acceleration: Bogoliubov
coefficients of charged scalars and fermions, accelerating Schrodinger
packets, out-basis Fock expansions of Bell states, and logarithmic
negativities from partial transposes, with sweeps that tabulate them.
"""

from accel_ent.bogoliubov import (
    FieldConfig,
    Statistics,
    fermion_coefficients,
    r_from_acceleration,
    scalar_coefficients,
    spectra,
)
from accel_ent.curves import CurveTable, SweepSpec, run_sweep
from accel_ent.entanglement import (
    EntanglementReport,
    Scenario,
    entanglement_report,
    partial_transpose,
    reduced_density,
)
from accel_ent.errors import (
    AccelEntError,
    ConvergenceError,
    DegenerateStateError,
    DimensionLimitError,
    MixedStatisticsError,
    ParameterDomainError,
    QuadratureToleranceError,
)
from accel_ent.fock import FockVector, StateSpec, build_bell_out
from accel_ent.packets import TwoBodyParams, schmidt_result
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DEFAULT_SETTINGS",
    "AccelEntError",
    "ConvergenceError",
    "CurveTable",
    "DegenerateStateError",
    "DimensionLimitError",
    "EntanglementReport",
    "FieldConfig",
    "FockVector",
    "MixedStatisticsError",
    "NumericSettings",
    "ParameterDomainError",
    "QuadratureToleranceError",
    "Scenario",
    "StateSpec",
    "Statistics",
    "SweepSpec",
    "TwoBodyParams",
    "build_bell_out",
    "entanglement_report",
    "fermion_coefficients",
    "partial_transpose",
    "r_from_acceleration",
    "reduced_density",
    "run_sweep",
    "scalar_coefficients",
    "schmidt_result",
    "spectra",
]
