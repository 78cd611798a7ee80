"""
Pytest configuration and fixtures for accel-ent tests.

Provides shared numeric settings, the infinite-acceleration squeezing
parameter, representative Bell states and a CLI runner.
"""

import math
from pathlib import Path

import pytest
from typer.testing import CliRunner

from accel_ent.fock import FockVector, StateSpec, build_bell_out
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings


@pytest.fixture
def settings() -> NumericSettings:
    """
    Default numeric settings.

    Returns
    -------
    NumericSettings
        Library defaults (1e-12 truncation, 4096 dimension guard).
    """
    return DEFAULT_SETTINGS


@pytest.fixture
def r_infinite() -> float:
    """Scalar squeezing parameter at infinite acceleration, ``asinh(1)``."""
    return math.asinh(1.0)


@pytest.fixture
def fermion_bell() -> FockVector:
    """
    Fermion Bell state with mode omega accelerated at ``r_f = pi/6``.

    Returns
    -------
    FockVector
        Four-slot state with s inertial.
    """
    return build_bell_out(StateSpec.inertial(), StateSpec.fermion(math.pi / 6))


@pytest.fixture
def restricted_bell(r_infinite: float) -> FockVector:
    """Scalar Bell state at infinite acceleration with at most one pair."""
    return build_bell_out(StateSpec.inertial(), StateSpec.restricted(r_infinite, 1))


@pytest.fixture
def runner() -> CliRunner:
    """Typer CLI runner."""
    return CliRunner()


@pytest.fixture
def sweep_file(tmp_path: Path) -> Path:
    """
    Small pairs sweep definition written to a temporary YAML file.

    Returns
    -------
    Path
        File scanning ``M = 1..3`` at infinite acceleration.
    """
    path = tmp_path / "pairs.yaml"
    path.write_text(
        'name: "pairs_small"\nkind: "pairs"\ngrid:\n  start: 1\n  stop: 3\n'
    )
    return path
