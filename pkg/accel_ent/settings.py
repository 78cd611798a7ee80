"""
Numerical settings shared across accel-ent.

All tolerances, caps and guards live in one frozen dataclass so a run can
be reproduced from a single object. Callers override individual values
with :func:`dataclasses.replace`.
"""

import os
from dataclasses import dataclass
from pathlib import Path

OUTPUT_DIR_ENV = "ACCEL_ENT_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = Path("figures")


@dataclass(frozen=True)
class NumericSettings:
    """
    Tolerances and limits used by the numerical pipeline.

    Parameters
    ----------
    epsilon : float
        Truncation tolerance for unrestricted bosonic series.
    negative_threshold : float
        Eigenvalues below ``-negative_threshold`` count as negative.
    jacobi_tolerance : float
        Off-diagonal Frobenius norm at which a Jacobi sweep stops.
    jacobi_max_sweeps : int
        Sweeps allowed before the eigensolver gives up.
    dimension_limit : int
        Largest density-matrix dimension accepted.
    series_tolerance : float
        Summation of closed-form series stops once a term falls below this.
    series_max_terms : int
        Hard cap on the number of series terms.
    quad_epsabs, quad_epsrel : float
        Absolute and relative targets handed to ``scipy.integrate.quad``.
    quad_limit : int
        Subinterval limit for ``scipy.integrate.quad``.
    quad_tolerance : float
        Largest accepted quadrature error estimate.
    grid_points : int
        Default number of points in a sweep grid.
    coarse_grid_points : int
        Default grid of unrestricted both-accelerated scalar sweeps, which
        diagonalize the largest matrices.
    schmidt_grid_points : int
        Default ``v_tilde`` grid of Schmidt-number sweeps.
    workers : int
        Worker threads used by sweeps.
    """

    epsilon: float = 1e-12
    negative_threshold: float = 1e-12
    jacobi_tolerance: float = 1e-13
    jacobi_max_sweeps: int = 60
    dimension_limit: int = 4096
    series_tolerance: float = 1e-15
    series_max_terms: int = 100_000
    quad_epsabs: float = 1e-13
    quad_epsrel: float = 1e-12
    quad_limit: int = 400
    quad_tolerance: float = 1e-9
    grid_points: int = 101
    coarse_grid_points: int = 21
    schmidt_grid_points: int = 100
    workers: int = 1


DEFAULT_SETTINGS = NumericSettings()


def default_output_dir() -> Path:
    """Output directory for figure tables, honouring ``ACCEL_ENT_OUTPUT_DIR``."""
    value = os.environ.get(OUTPUT_DIR_ENV)
    return Path(value) if value else DEFAULT_OUTPUT_DIR


__all__ = [
    "DEFAULT_OUTPUT_DIR",
    "DEFAULT_SETTINGS",
    "OUTPUT_DIR_ENV",
    "NumericSettings",
    "default_output_dir",
]
