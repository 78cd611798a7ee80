"""
Parameter sweeps and figure tables.

Sweeps evaluate the entanglement pipeline, the packet Schmidt numbers and
the spectra on parameter grids, and return :class:`CurveTable` objects
that serialize to CSV or JSON.
"""

from accel_ent.curves.figures import FIGURES, build_figure, write_figures
from accel_ent.curves.loaders import load_sweep
from accel_ent.curves.models import TablePayload
from accel_ent.curves.sweeps import (
    SweepKind,
    SweepSpec,
    fermion_curves,
    packet_grid,
    pairs_scan,
    run_sweep,
    scalar_curves,
    schmidt_curve,
    spectra_curve,
)
from accel_ent.curves.table import CurveTable, OutputFormat, combine, stack

__all__ = [
    "FIGURES",
    "CurveTable",
    "OutputFormat",
    "SweepKind",
    "SweepSpec",
    "TablePayload",
    "build_figure",
    "combine",
    "fermion_curves",
    "load_sweep",
    "packet_grid",
    "pairs_scan",
    "run_sweep",
    "scalar_curves",
    "schmidt_curve",
    "spectra_curve",
    "stack",
    "write_figures",
]
