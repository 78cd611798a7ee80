"""
Flag schemas for the accel-ent CLI.

Every subcommand validates its flags against one of these pydantic models
before any computation starts; a :class:`pydantic.ValidationError` is
reported as a usage error (exit code 2).
"""

import math
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR, Statistics
from accel_ent.curves import OutputFormat
from accel_ent.entanglement import Scenario


class GlobalOptions(BaseModel):
    """Options of the top-level callback, shared by every subcommand."""

    model_config = ConfigDict(frozen=True)

    format: OutputFormat = Field(
        default=OutputFormat.CSV, description="Table output format"
    )
    output: Path | None = Field(
        default=None, description="Write data here instead of stdout"
    )
    workers: int = Field(default=1, ge=1, le=256, description="Sweep worker threads")
    quiet: bool = Field(default=False, description="Suppress progress lines")


class FlagModel(BaseModel):
    """Base for subcommand flag schemas; unknown fields are rejected."""

    model_config = ConfigDict(frozen=True, extra="forbid")


class AccelerationFlags(FlagModel):
    """
    A squeezing parameter given directly or as ``(mass, accel)``.

    ``value`` is ``r`` or ``r_f``; when it is set, ``mass``/``accel`` are
    ignored by the command (with a warning).
    """

    value: float | None = None
    mass: float | None = Field(default=None, gt=0.0)
    accel: float | None = Field(default=None, gt=0.0)

    @model_validator(mode="after")
    def _check_pair(self) -> "AccelerationFlags":
        if (self.mass is None) != (self.accel is None):
            raise ValueError("--mass and --accel must be given together")
        return self

    @property
    def has_direct(self) -> bool:
        return self.value is not None

    @property
    def has_field(self) -> bool:
        return self.mass is not None and self.accel is not None


class BogoliubovFlags(FlagModel):
    mass: float = Field(gt=0.0)
    accel: float = Field(gt=0.0)
    stats: Statistics = Statistics.SCALAR


class SpectrumFlags(FlagModel):
    mass: float = Field(gt=0.0)
    omega: float = Field(gt=0.0)
    accel: float | None = Field(default=None, gt=0.0)
    grid: int | None = Field(default=None, ge=2)


class SchmidtFlags(FlagModel):
    vtilde: float | None = Field(default=None, ge=0.0)
    grid: int | None = Field(default=None, ge=2)
    a1: float = -0.5
    a2: float = 0.5
    time: float = 15.0

    @model_validator(mode="after")
    def _one_source(self) -> "SchmidtFlags":
        if self.vtilde is not None and self.grid is not None:
            raise ValueError("give either --vtilde or --grid, not both")
        return self


class PacketFlags(FlagModel):
    mass: float = Field(default=1.0, gt=0.0)
    b: float = Field(default=1.0, gt=0.0)
    x0: float = 0.0
    v1: float = -1.0
    v2: float = 1.0
    a1: float = -0.5
    a2: float = 0.5
    sign: str = Field(default="+", pattern=r"^(\+|-|plus|minus)$")
    time: float = 15.0
    grid: int = Field(default=61, ge=2, le=2001)

    @model_validator(mode="after")
    def _finite(self) -> "PacketFlags":
        for name in ("x0", "v1", "v2", "a1", "a2", "time"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"--{name} must be finite")
        return self


class FermionLnFlags(FlagModel):
    rf: AccelerationFlags
    grid: int | None = Field(default=None, ge=2)
    scenario: Scenario = Scenario.ONE

    @model_validator(mode="after")
    def _range(self) -> "FermionLnFlags":
        if self.rf.value is not None and not 0.0 <= self.rf.value <= R_MAX_FERMION:
            raise ValueError(f"--rf must lie in [0, pi/2], got {self.rf.value!r}")
        return self


class ScalarLnFlags(FlagModel):
    r: AccelerationFlags
    grid: int | None = Field(default=None, ge=2)
    pairs: int | None = Field(default=None, ge=1)
    eps: float = Field(default=1e-12, gt=0.0, lt=1.0)
    scenario: Scenario = Scenario.ONE

    @model_validator(mode="after")
    def _range(self) -> "ScalarLnFlags":
        r = self.r.value
        if r is not None and not 0.0 <= r <= R_MAX_SCALAR + 1e-12:
            raise ValueError(f"--r must lie in [0, asinh(1)], got {r!r}")
        return self


class PairsScanFlags(FlagModel):
    max_m: int = Field(default=10, ge=1, le=200)
    r: float = Field(default=R_MAX_SCALAR, ge=0.0, le=R_MAX_SCALAR + 1e-12)


class FiguresFlags(FlagModel):
    out: Path
    only: tuple[str, ...] = ()


class DumpStateFlags(FlagModel):
    spec: str = Field(min_length=1)
    spec_s: str = Field(default="inertial", min_length=1)


class SweepFlags(FlagModel):
    file: Path


class CliConfig(BaseModel):
    """
    One validated invocation: subcommand, its flags and the global options.

    Parameters
    ----------
    subcommand : str
        Name of the subcommand.
    flags : FlagModel
        Validated subcommand flags.
    options : GlobalOptions
        Output path, format, worker count and verbosity.
    """

    model_config = ConfigDict(frozen=True)

    subcommand: str = Field(min_length=1)
    flags: FlagModel
    options: GlobalOptions = Field(default_factory=GlobalOptions)

    @property
    def output(self) -> Path | None:
        return self.options.output

    @property
    def format(self) -> OutputFormat:
        return self.options.format


__all__ = [
    "AccelerationFlags",
    "BogoliubovFlags",
    "CliConfig",
    "DumpStateFlags",
    "FermionLnFlags",
    "FiguresFlags",
    "FlagModel",
    "GlobalOptions",
    "PacketFlags",
    "PairsScanFlags",
    "ScalarLnFlags",
    "SchmidtFlags",
    "SpectrumFlags",
    "SweepFlags",
]
