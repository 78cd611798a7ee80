"""Bogoliubov coefficients, squeezing parameters and particle spectra."""

from accel_ent.bogoliubov.coefficients import (
    PHASE_PHI,
    PHASE_PHI1,
    PHASE_PHI2,
    R_MAX_FERMION,
    R_MAX_SCALAR,
    BogoliubovFermion,
    BogoliubovScalar,
    FieldConfig,
    Statistics,
    fermion_coefficients,
    log_abs_gamma_half_imag,
    log_abs_gamma_imag,
    mu_squared,
    mu_squared_from_acceleration,
    pair_occupation,
    r_from_acceleration,
    scalar_coefficients,
)
from accel_ent.bogoliubov.spectra import SpectraResult, spectra, unruh_parameter

__all__ = [
    "PHASE_PHI",
    "PHASE_PHI1",
    "PHASE_PHI2",
    "R_MAX_FERMION",
    "R_MAX_SCALAR",
    "BogoliubovFermion",
    "BogoliubovScalar",
    "FieldConfig",
    "SpectraResult",
    "Statistics",
    "fermion_coefficients",
    "log_abs_gamma_half_imag",
    "log_abs_gamma_imag",
    "mu_squared",
    "mu_squared_from_acceleration",
    "pair_occupation",
    "r_from_acceleration",
    "scalar_coefficients",
    "spectra",
    "unruh_parameter",
]
