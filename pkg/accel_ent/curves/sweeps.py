"""
Parameter sweeps that tabulate entanglement and packet quantities.

Each sweep maps a row function over a grid. Rows are independent and run
on a thread pool of ``settings.workers`` threads; ``Executor.map`` keeps
the output in grid order, so tables are identical for any worker count.

Logarithmic negativities always come from the generic pipeline
(:func:`accel_ent.entanglement.entanglement_report`); the analytic forms
only feed the ``*_closed`` and ``residual_*`` columns.
"""

import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import TypeVar

import numpy as np

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR, spectra
from accel_ent.curves.table import CurveTable
from accel_ent.entanglement import (
    EntanglementReport,
    Scenario,
    entanglement_report,
    fermion_closed_forms,
    scalar_closed_forms,
)
from accel_ent.errors import ParameterDomainError
from accel_ent.fock import FockVector, StateSpec, build_bell_out, one_particle_cutoff
from accel_ent.packets import (
    SIGMA_SPAN,
    Sign,
    TwoBodyParams,
    packet_center,
    packet_width,
    purity,
    schmidt_number_closed,
    two_body_grid,
)
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings
from accel_ent.utilities import even_grid, require_range

T = TypeVar("T")
R = TypeVar("R")

INFINITE_ACCELERATION_R = R_MAX_SCALAR
DEFAULT_MAX_PAIRS = 10


def map_rows(
    fn: Callable[[T], R],
    grid: Iterable[T],
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> list[R]:
    """Apply ``fn`` to every grid point, in grid order."""
    points = list(grid)
    if settings.workers <= 1 or len(points) <= 1:
        return [fn(point) for point in points]
    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        return list(pool.map(fn, points))


def describe_grid(grid: Sequence[float]) -> str:
    """Header text for a grid: ``start..stop (n points)``."""
    if not len(grid):
        return "empty"
    return f"{grid[0]!r}..{grid[-1]!r} ({len(grid)} points)"


def _settings_metadata(settings: NumericSettings) -> dict[str, object]:
    return {
        "negative_threshold": settings.negative_threshold,
        "jacobi_tolerance": settings.jacobi_tolerance,
    }


class SweepKind(Enum):
    """Family of quantities a sweep tabulates."""

    FERMION = "fermion"
    SCALAR = "scalar"
    PAIRS = "pairs"

    @classmethod
    def parse(cls, value: "str | SweepKind") -> "SweepKind":
        """
        Parse a sweep kind name.

        Raises
        ------
        ValueError
            If the name is unknown.
        """
        if isinstance(value, SweepKind):
            return value
        for member in cls:
            if member.value == value.strip().lower():
                return member
        valid = ", ".join(f"'{m.value}'" for m in cls)
        raise ValueError(f"Unknown sweep kind: '{value}'. Valid: {valid}")


@dataclass(frozen=True)
class SweepSpec:
    """
    Definition of an entanglement sweep.

    Parameters
    ----------
    kind : SweepKind
        ``fermion`` sweeps ``r_f``, ``scalar`` sweeps ``r`` and ``pairs``
        sweeps the pair limit ``M`` at infinite acceleration.
    grid : tuple[float, ...]
        Parameter values (``M`` values for ``pairs``).
    scenario : Scenario
        For scalar sweeps, whether the both-accelerated columns are added.
    epsilon : float
        Truncation tolerance of unrestricted scalar series.
    M : int | None
        Pair restriction of scalar sweeps; ``None`` is unrestricted.
    name : str
        Table name.

    Raises
    ------
    ParameterDomainError
        If a grid value, ``epsilon`` or ``M`` is outside its legal range.
    """

    kind: SweepKind
    grid: tuple[float, ...]
    scenario: Scenario = Scenario.ONE
    epsilon: float = 1e-12
    M: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SweepKind.parse(self.kind))
        object.__setattr__(self, "scenario", Scenario.parse(self.scenario))
        if not self.grid:
            raise ParameterDomainError("sweep grid is empty")
        match self.kind:
            case SweepKind.FERMION:
                grid = tuple(
                    require_range("r_f", v, 0.0, R_MAX_FERMION) for v in self.grid
                )
            case SweepKind.SCALAR:
                grid = tuple(
                    require_range("r", v, 0.0, R_MAX_SCALAR) for v in self.grid
                )
            case SweepKind.PAIRS:
                if any(int(v) != v or v < 1 for v in self.grid):
                    raise ParameterDomainError(
                        f"pair limits must be positive integers, got {list(self.grid)}"
                    )
                grid = tuple(float(int(v)) for v in self.grid)
        object.__setattr__(self, "grid", grid)
        if not 0.0 < self.epsilon < 1.0:
            raise ParameterDomainError(
                f"epsilon must lie in (0, 1), got {self.epsilon!r}"
            )
        if self.M is not None and (int(self.M) != self.M or self.M < 1):
            raise ParameterDomainError(f"M must be a positive integer, got {self.M!r}")
        if not self.name:
            object.__setattr__(self, "name", f"{self.kind.value}_curves")

    @property
    def statistics(self) -> str:
        """``fermion`` or ``scalar``."""
        return "fermion" if self.kind is SweepKind.FERMION else "scalar"


# ============================================================================
# Fermions
# ============================================================================


def _fermion_row(r_f: float, settings: NumericSettings) -> dict[str, float]:
    one = build_bell_out(StateSpec.inertial(), StateSpec.fermion(r_f))
    both = build_bell_out(StateSpec.fermion(r_f), StateSpec.fermion(r_f))

    def report(state: FockVector, name: str) -> EntanglementReport:
        return entanglement_report(state, name, settings)

    total, sp, sa = (report(one, n) for n in ("s|omega", "s|omega_p", "s|omega_a"))
    total_both, pp, pa, ap, aa = (
        report(both, n) for n in ("(p,a)|(p,a)", "p|p", "p|a", "a|p", "a|a")
    )
    closed_one = fermion_closed_forms(r_f, Scenario.ONE)
    closed_both = fermion_closed_forms(r_f, Scenario.BOTH)
    return {
        "r_f": r_f,
        "LN_total": total.log_negativity,
        "LN_sp": sp.log_negativity,
        "LN_sa": sa.log_negativity,
        "LN_pp": pp.log_negativity,
        "LN_pa": pa.log_negativity,
        "LN_ap": ap.log_negativity,
        "LN_aa": aa.log_negativity,
        "LN_total_both": total_both.log_negativity,
        "additivity_one": sp.negativity + sa.negativity - total.negativity,
        "additivity_both": (
            pp.negativity + pa.negativity + ap.negativity + aa.negativity
            - total_both.negativity
        ),
        "residual_total": total.log_negativity - closed_one["LN_total"],
        "residual_sp": sp.log_negativity - closed_one["LN_sp"],
        "residual_sa": sa.log_negativity - closed_one["LN_sa"],
        "residual_pp": pp.log_negativity - closed_both["LN_pp"],
        "residual_pa": pa.log_negativity - closed_both["LN_pa"],
        "residual_ap": ap.log_negativity - closed_both["LN_ap"],
        "residual_aa": aa.log_negativity - closed_both["LN_aa"],
    }


def fermion_curves(
    grid: Sequence[float] | None = None,
    settings: NumericSettings = DEFAULT_SETTINGS,
    name: str = "fermion_curves",
) -> CurveTable:
    """
    Fermion logarithmic negativities over an ``r_f`` grid.

    Parameters
    ----------
    grid : Sequence[float] | None
        ``r_f`` values in ``[0, pi/2]``; default ``settings.grid_points``
        even points.
    settings : NumericSettings
        Pipeline tolerances and worker count.
    name : str
        Table name.

    Returns
    -------
    CurveTable
        Columns ``r_f, LN_total, LN_sp, LN_sa, LN_pp, LN_pa, LN_ap, LN_aa``,
        the both-accelerated total, negativity additivity gaps and the
        pipeline-minus-closed-form residuals.
    """
    if grid is None:
        grid = even_grid(0.0, R_MAX_FERMION, settings.grid_points)
    spec = SweepSpec(SweepKind.FERMION, tuple(grid), Scenario.BOTH, name=name)
    rows = map_rows(lambda r_f: _fermion_row(r_f, settings), spec.grid, settings)
    return CurveTable.from_records(
        name,
        rows,
        {
            "kind": "fermion",
            "grid": describe_grid(spec.grid),
            **_settings_metadata(settings),
        },
    )


# ============================================================================
# Scalars
# ============================================================================


def _scalar_spec(r: float, epsilon: float, M: int | None) -> StateSpec:
    if M is None:
        return StateSpec.scalar(r, epsilon)
    return StateSpec.restricted(r, M)


def _scalar_row(
    r: float,
    epsilon: float,
    M: int | None,
    scenario: Scenario,
    settings: NumericSettings,
) -> dict[str, float]:
    spec = _scalar_spec(r, epsilon, M)
    one = build_bell_out(StateSpec.inertial(), spec)
    total, sp, sa = (
        entanglement_report(one, n, settings)
        for n in ("s|omega", "s|omega_p", "s|omega_a")
    )
    closed = scalar_closed_forms(r, M, settings)
    row = {
        "r": r,
        "LN_total": total.log_negativity,
        "LN_sp": sp.log_negativity,
        "LN_sa": sa.log_negativity,
        "LN_sp_closed": closed["LN_sp"],
        "LN_sa_closed": closed["LN_sa"],
        "residual_sp": sp.log_negativity - closed["LN_sp"],
        "residual_sa": sa.log_negativity - closed["LN_sa"],
        "truncation_error": max(total.truncation_error, sp.truncation_error),
        "series_error": closed.error_bound,
    }
    if scenario is Scenario.BOTH:
        both = build_bell_out(spec, spec)
        total_both, pp, pa, ap, aa = (
            entanglement_report(both, n, settings)
            for n in ("(p,a)|(p,a)", "p|p", "p|a", "a|p", "a|a")
        )
        row |= {
            "LN_total_both": total_both.log_negativity,
            "LN_pp": pp.log_negativity,
            "LN_pa": pa.log_negativity,
            "LN_ap": ap.log_negativity,
            "LN_aa": aa.log_negativity,
            "negativity_gap": (
                pp.negativity + pa.negativity + ap.negativity + aa.negativity
                - total_both.negativity
            ),
            "truncation_error_both": total_both.truncation_error,
        }
    return row


def scalar_curves(
    grid: Sequence[float] | None = None,
    epsilon: float = 1e-12,
    M: int | None = None,
    scenario: Scenario | str = Scenario.ONE,
    settings: NumericSettings = DEFAULT_SETTINGS,
    name: str = "scalar_curves",
) -> CurveTable:
    """
    Scalar logarithmic negativities over an ``r`` grid.

    Parameters
    ----------
    grid : Sequence[float] | None
        ``r`` values in ``[0, asinh 1]``. The default has
        ``settings.grid_points`` points, or ``settings.coarse_grid_points`` for
        unrestricted both-accelerated sweeps.
    epsilon : float
        Truncation tolerance of the unrestricted series.
    M : int | None
        Pair restriction; ``None`` truncates the full series instead.
    scenario : Scenario | str
        ``both`` adds ``LN_pp``, ``LN_pa``, ``LN_ap``, ``LN_aa`` with both
        modes accelerated at the same ``r``.
    settings : NumericSettings
        Pipeline tolerances and worker count.
    name : str
        Table name.

    Returns
    -------
    CurveTable
        One row per ``r``. ``truncation_error`` bounds every unrestricted
        LN value, so a vanishing LN is asserted as ``LN <= truncation_error``.
    """
    scenario = Scenario.parse(scenario)
    if grid is None:
        points = (
            settings.coarse_grid_points
            if M is None and scenario is Scenario.BOTH
            else settings.grid_points
        )
        grid = even_grid(0.0, R_MAX_SCALAR, points)
    spec = SweepSpec(SweepKind.SCALAR, tuple(grid), scenario, epsilon, M, name)
    rows = map_rows(
        lambda r: _scalar_row(r, spec.epsilon, spec.M, spec.scenario, settings),
        spec.grid,
        settings,
    )
    metadata: dict[str, object] = {
        "kind": "scalar",
        "scenario": scenario.value,
        "grid": describe_grid(spec.grid),
        "M": "unrestricted" if M is None else M,
        **_settings_metadata(settings),
    }
    if M is None:
        metadata["epsilon"] = epsilon
        metadata["max_cutoff"] = one_particle_cutoff(max(spec.grid), epsilon)
    return CurveTable.from_records(name, rows, metadata)


def _pairs_row(M: int, r: float, settings: NumericSettings) -> dict[str, float]:
    state = build_bell_out(StateSpec.inertial(), StateSpec.restricted(r, M))
    sp = entanglement_report(state, "s|omega_p", settings)
    sa = entanglement_report(state, "s|omega_a", settings)
    closed = scalar_closed_forms(r, M, settings)
    return {
        "M": float(M),
        "LN_sp": sp.log_negativity,
        "LN_sa": sa.log_negativity,
        "LN_sp_closed": closed["LN_sp"],
        "LN_sa_closed": closed["LN_sa"],
        "residual_sp": sp.log_negativity - closed["LN_sp"],
        "residual_sa": sa.log_negativity - closed["LN_sa"],
    }


def pairs_scan(
    M_range: Iterable[int] | None = None,
    r: float = INFINITE_ACCELERATION_R,
    settings: NumericSettings = DEFAULT_SETTINGS,
    name: str = "pairs_scan",
) -> CurveTable:
    """
    ``LN(rho_{s,p})`` and ``LN(rho_{s,a})`` against the pair limit ``M``.

    Parameters
    ----------
    M_range : Iterable[int] | None
        Positive pair limits; default ``1..10``.
    r : float
        Squeezing parameter; default ``asinh 1`` (infinite acceleration).
    """
    if M_range is None:
        M_range = range(1, DEFAULT_MAX_PAIRS + 1)
    values = tuple(M_range)
    spec = SweepSpec(SweepKind.PAIRS, tuple(float(m) for m in values), name=name)
    r = require_range("r", r, 0.0, R_MAX_SCALAR)
    rows = map_rows(lambda m: _pairs_row(int(m), r, settings), spec.grid, settings)
    return CurveTable.from_records(
        name,
        rows,
        {
            "kind": "pairs",
            "r": r,
            "grid": describe_grid(spec.grid),
            **_settings_metadata(settings),
        },
    )


def run_sweep(
    spec: SweepSpec, settings: NumericSettings = DEFAULT_SETTINGS
) -> CurveTable:
    """Tabulate ``spec`` with the matching sweep function."""
    match spec.kind:
        case SweepKind.FERMION:
            return fermion_curves(spec.grid, settings, spec.name)
        case SweepKind.SCALAR:
            return scalar_curves(
                spec.grid, spec.epsilon, spec.M, spec.scenario, settings, spec.name
            )
        case SweepKind.PAIRS:
            pairs = [int(m) for m in spec.grid]
            return pairs_scan(pairs, settings=settings, name=spec.name)


# ============================================================================
# Packets and spectra
# ============================================================================


def _schmidt_row(
    v_tilde: float, template: TwoBodyParams, t: float, settings: NumericSettings
) -> dict[str, float]:
    plus = TwoBodyParams(v1=0.0, v2=v_tilde, sign=Sign.PLUS)
    minus = replace(plus, sign=Sign.MINUS)
    k_plus = 1.0 / purity(plus, 0.0, settings)
    moving = replace(plus, a1=template.a1, a2=template.a2)
    k_plus_moving = 1.0 / purity(moving, t, settings)
    k_plus_closed = schmidt_number_closed(v_tilde, Sign.PLUS)
    if minus.is_degenerate:
        # the antisymmetric state vanishes at zero relative velocity
        k_minus = k_minus_closed = math.nan
    else:
        k_minus = 1.0 / purity(minus, 0.0, settings)
        k_minus_closed = schmidt_number_closed(v_tilde, Sign.MINUS)
    return {
        "v_tilde": v_tilde,
        "K_plus_closed": k_plus_closed,
        "K_plus_numeric": k_plus,
        "K_minus_closed": k_minus_closed,
        "K_minus_numeric": k_minus,
        "K_plus_accelerated": k_plus_moving,
        "residual_plus": k_plus - k_plus_closed,
        "residual_minus": k_minus - k_minus_closed,
        "residual_acceleration": k_plus_moving - k_plus,
    }


def schmidt_curve(
    grid: Sequence[float] | None = None,
    settings: NumericSettings = DEFAULT_SETTINGS,
    accelerations: tuple[float, float] = (-0.5, 0.5),
    t: float = 15.0,
    name: str = "schmidt_curve",
) -> CurveTable:
    """
    Schmidt numbers ``K+`` and ``K-`` against ``v_tilde``.

    Packets use ``m = b = 1`` in the frame ``v1 = 0, v2 = v_tilde``. Every
    row also evaluates ``K+`` for accelerated packets at time ``t``, which
    must match the unaccelerated value.

    Parameters
    ----------
    grid : Sequence[float] | None
        Non-negative ``v_tilde`` values; ``K-`` columns are NaN at zero,
        where the antisymmetric state vanishes. Default
        ``settings.schmidt_grid_points`` points on ``[0.04, 4]``.
    """
    if grid is None:
        grid = even_grid(0.04, 4.0, settings.schmidt_grid_points)
    values = [float(v) for v in grid]
    if any(v < 0.0 or not math.isfinite(v) for v in values):
        raise ParameterDomainError(
            "v_tilde grid must be non-negative", f"grid: {values}"
        )
    template = TwoBodyParams(a1=accelerations[0], a2=accelerations[1])
    rows = map_rows(lambda v: _schmidt_row(v, template, t, settings), values, settings)
    return CurveTable.from_records(
        name,
        rows,
        {
            "kind": "schmidt",
            "grid": describe_grid(values),
            "m": 1.0,
            "b": 1.0,
            "a1": template.a1,
            "a2": template.a2,
            "t": t,
            "quad_tolerance": settings.quad_tolerance,
        },
    )


def spectra_curve(
    accelerations: Sequence[float] | None = None,
    m: float = 1.0,
    omega: float = 1.0,
    settings: NumericSettings = DEFAULT_SETTINGS,
    name: str = "spectra_curve",
) -> CurveTable:
    """
    Accelerated-particle and detector spectra against the acceleration.

    Default grid: ``settings.grid_points`` points on ``[0.1, 10]``.
    """
    if accelerations is None:
        accelerations = even_grid(0.1, 10.0, settings.grid_points)

    def row(a: float) -> dict[str, float]:
        result = spectra(m, a, omega)
        return {
            "a": a,
            "S_accelerated": result.accelerated,
            "S_unruh": result.unruh,
            "r": result.r,
            "r_unruh": result.r_unruh,
            "identity_residual": result.identity_residual,
        }

    rows = map_rows(row, [float(a) for a in accelerations], settings)
    result = spectra(m, 1.0, omega)
    return CurveTable.from_records(
        name,
        rows,
        {
            "kind": "spectra",
            "m": m,
            "omega": omega,
            "accelerated_form": result.accelerated_form,
            "unruh_form": result.unruh_form,
        },
    )


def _axis(centers: Sequence[float], width: float, points: int) -> np.ndarray:
    lower = min(centers) - SIGMA_SPAN * width
    upper = max(centers) + SIGMA_SPAN * width
    return even_grid(lower, upper, points)


def packet_grid(
    params: TwoBodyParams,
    t: float,
    points: int = 61,
    settings: NumericSettings = DEFAULT_SETTINGS,
    name: str = "packet_grid",
) -> CurveTable:
    """
    ``|Psi(x, y, t)|`` on a square grid covering both packet pairs.

    Each axis spans the packet centers at ``t`` plus ``SIGMA_SPAN`` widths.

    Returns
    -------
    CurveTable
        Columns ``t, x, y, abs_psi`` with ``y`` varying fastest.
    """
    width = float(packet_width(t, params.m, params.b))
    xs = _axis([float(packet_center(t, p)) for p in params.x_packets()], width, points)
    ys = _axis([float(packet_center(t, p)) for p in params.y_packets()], width, points)
    values = two_body_grid(params, t, xs, ys, settings)
    rows = tuple(
        (t, float(x), float(y), float(values[i, j]))
        for i, x in enumerate(xs)
        for j, y in enumerate(ys)
    )
    return CurveTable(
        name=name,
        columns=("t", "x", "y", "abs_psi"),
        rows=rows,
        metadata={
            "kind": "packet",
            "m": str(params.m),
            "b": str(params.b),
            "x0": str(params.x0),
            "v1": str(params.v1),
            "v2": str(params.v2),
            "a1": str(params.a1),
            "a2": str(params.a2),
            "sign": params.sign.value,
            "points": str(points),
        },
    )


__all__ = [
    "DEFAULT_MAX_PAIRS",
    "INFINITE_ACCELERATION_R",
    "SweepKind",
    "SweepSpec",
    "describe_grid",
    "fermion_curves",
    "map_rows",
    "packet_grid",
    "pairs_scan",
    "run_sweep",
    "scalar_curves",
    "schmidt_curve",
    "spectra_curve",
]
