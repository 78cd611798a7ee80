"""
Figure tables: one builder per figure identifier.

``write_figures`` writes ``<figure-id>.csv`` (or ``.json``) for every entry
of :data:`FIGURES` into an output directory.
"""

from collections.abc import Callable, Iterable
from pathlib import Path

from accel_ent.curves.sweeps import (
    fermion_curves,
    packet_grid,
    pairs_scan,
    scalar_curves,
    schmidt_curve,
)
from accel_ent.curves.table import CurveTable, OutputFormat, combine, stack
from accel_ent.entanglement import Scenario
from accel_ent.packets import TwoBodyParams
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings

FigureBuilder = Callable[[NumericSettings], CurveTable]

# Two-lobe packet pair; b is not fixed by the figure and defaults to 1.
ACCELERATED_PAIR = TwoBodyParams(v1=-1.0, v2=1.0, a1=-0.5, a2=0.5)
FREE_PAIR = TwoBodyParams(v1=-1.0, v2=1.0)
SNAPSHOT_TIME = 15.0


def _bfacc(settings: NumericSettings) -> CurveTable:
    return fermion_curves(settings=settings, name="bfacc")


def _enb_1(settings: NumericSettings) -> CurveTable:
    return scalar_curves(
        epsilon=settings.epsilon,
        scenario=Scenario.BOTH,
        settings=settings,
        name="enb_1",
    )


def _encp_1(settings: NumericSettings) -> CurveTable:
    tables = [
        scalar_curves(M=m, settings=settings, name=f"encp_1_m{m}") for m in (1, 2)
    ]
    return combine("encp_1", tables, ("_M1", "_M2"))


def _bsacc(m: int) -> FigureBuilder:
    def build(settings: NumericSettings) -> CurveTable:
        return scalar_curves(
            M=m, scenario=Scenario.BOTH, settings=settings, name=f"bsacc_{m}"
        )

    return build


def _nop_tp(settings: NumericSettings) -> CurveTable:
    return pairs_scan(settings=settings, name="nop_tp")


def _schno(settings: NumericSettings) -> CurveTable:
    return schmidt_curve(settings=settings, name="schno")


def _accwp_0(settings: NumericSettings) -> CurveTable:
    snapshots = [
        packet_grid(ACCELERATED_PAIR, t, settings=settings, name="accwp_0")
        for t in (0.0, SNAPSHOT_TIME)
    ]
    return stack("accwp_0", snapshots, {"t": f"0, {SNAPSHOT_TIME}"})


def _accwp_2(settings: NumericSettings) -> CurveTable:
    return packet_grid(FREE_PAIR, SNAPSHOT_TIME, settings=settings, name="accwp_2")


FIGURES: dict[str, FigureBuilder] = {
    "bfacc": _bfacc,
    "enb_1": _enb_1,
    "encp_1": _encp_1,
    "nop_tp": _nop_tp,
    "bsacc_1": _bsacc(1),
    "bsacc_2": _bsacc(2),
    "schno": _schno,
    "accwp_0": _accwp_0,
    "accwp_2": _accwp_2,
}


def build_figure(
    figure_id: str, settings: NumericSettings = DEFAULT_SETTINGS
) -> CurveTable:
    """
    Table of one figure.

    Raises
    ------
    ValueError
        If ``figure_id`` is not registered.
    """
    try:
        builder = FIGURES[figure_id]
    except KeyError:
        valid = ", ".join(f"'{k}'" for k in FIGURES)
        raise ValueError(f"Unknown figure: '{figure_id}'. Valid: {valid}") from None
    return builder(settings)


def write_figures(
    out_dir: Path | str,
    fmt: OutputFormat | str = OutputFormat.CSV,
    settings: NumericSettings = DEFAULT_SETTINGS,
    figure_ids: Iterable[str] | None = None,
    on_written: Callable[[Path], None] | None = None,
) -> list[Path]:
    """
    Write figure tables into ``out_dir``.

    Parameters
    ----------
    out_dir : Path | str
        Target directory, created if missing.
    fmt : OutputFormat | str
        ``csv`` or ``json``.
    settings : NumericSettings
        Pipeline settings.
    figure_ids : Iterable[str] | None
        Subset of :data:`FIGURES`; all by default.
    on_written : Callable[[Path], None] | None
        Called after each file is written.

    Returns
    -------
    list[Path]
        Written files, in registry order.
    """
    fmt = OutputFormat.parse(fmt)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for figure_id in figure_ids if figure_ids is not None else FIGURES:
        table = build_figure(figure_id, settings)
        path = table.write(out_dir / f"{figure_id}{fmt.suffix}", fmt)
        written.append(path)
        if on_written is not None:
            on_written(path)
    return written


__all__ = ["FIGURES", "FigureBuilder", "build_figure", "write_figures"]
