"""Density matrices, partial transposes, negativities and their closed forms."""

from accel_ent.entanglement.closed_forms import (
    ClosedForms,
    Scenario,
    fermion_closed_forms,
    restricted_ln_sa,
    restricted_ln_sp,
    scalar_closed_forms,
    scalar_series_ln_sp,
)
from accel_ent.entanglement.density import (
    BIPARTITIONS,
    BipartitionSpec,
    DensityMatrix,
    bipartition,
    partial_transpose,
    purity,
    reduced_density,
    transpose_subsystem,
)
from accel_ent.entanglement.jacobi import hermitian_eigenvalues, jacobi_eigenvalues
from accel_ent.entanglement.negativity import (
    LN_ERROR_FACTOR,
    EntanglementReport,
    entanglement_report,
    log_negativity,
    negativity,
    schmidt_weights,
)

__all__ = [
    "BIPARTITIONS",
    "LN_ERROR_FACTOR",
    "BipartitionSpec",
    "ClosedForms",
    "DensityMatrix",
    "EntanglementReport",
    "Scenario",
    "bipartition",
    "entanglement_report",
    "fermion_closed_forms",
    "hermitian_eigenvalues",
    "jacobi_eigenvalues",
    "log_negativity",
    "negativity",
    "partial_transpose",
    "purity",
    "reduced_density",
    "restricted_ln_sa",
    "restricted_ln_sp",
    "scalar_closed_forms",
    "scalar_series_ln_sp",
    "schmidt_weights",
    "transpose_subsystem",
]
