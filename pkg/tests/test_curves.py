"""
Tests for curve tables, sweeps, YAML sweep files and figure tables.
"""

import math
from dataclasses import replace
from pathlib import Path

import pytest

from accel_ent.curves import (
    FIGURES,
    CurveTable,
    OutputFormat,
    SweepKind,
    SweepSpec,
    build_figure,
    combine,
    fermion_curves,
    load_sweep,
    packet_grid,
    pairs_scan,
    run_sweep,
    scalar_curves,
    schmidt_curve,
    spectra_curve,
    stack,
    write_figures,
)
from accel_ent.entanglement import Scenario
from accel_ent.errors import ParameterDomainError
from accel_ent.fock import (
    restriction_params,
    scalar_out_one,
    scalar_out_vacuum,
    scalar_restricted_one,
    scalar_restricted_vacuum,
)
from accel_ent.packets import TwoBodyParams
from accel_ent.settings import NumericSettings
from accel_ent.utilities import even_grid

SWEEPS_DIR = Path(__file__).parents[1] / "data" / "sweeps"


@pytest.fixture
def table() -> CurveTable:
    """Small table with awkward float values and metadata."""
    return CurveTable(
        name="sample",
        columns=("r", "LN_sp"),
        rows=((0.0, 1.0), (0.1, 1.0 / 3.0), (math.asinh(1.0), 2.0**-40)),
        metadata={"kind": "scalar", "epsilon": "1e-12"},
    )


class TestCurveTable:
    """Tests for CurveTable construction and serialization."""

    def test_csv_header(self, table: CurveTable) -> None:
        """Test metadata lines and the column header."""
        lines = table.to_csv().splitlines()
        assert lines[:3] == ["# epsilon: 1e-12", "# kind: scalar", "r,LN_sp"]
        assert len(lines) == 6

    def test_csv_parses_back(self, table: CurveTable) -> None:
        """Test that CSV text reproduces the values exactly."""
        parsed = CurveTable.from_csv(table.to_csv(), name="sample")
        assert parsed == table

    def test_json_parses_back(self, table: CurveTable) -> None:
        """Test that JSON text reproduces the table exactly."""
        assert CurveTable.from_json(table.to_json()) == table

    def test_render(self, table: CurveTable) -> None:
        """Test format dispatch."""
        assert table.render("json") == table.to_json()
        assert table.render(OutputFormat.CSV) == table.to_csv()

    def test_write_to_directory(self, table: CurveTable, tmp_path: Path) -> None:
        """Test that a directory target receives <name>.<format>."""
        path = table.write(tmp_path, "json")
        assert path == tmp_path / "sample.json"
        assert CurveTable.from_json(path.read_text()) == table

    def test_invalid_rows(self) -> None:
        """Test row width and duplicate column checks."""
        with pytest.raises(ValueError, match="expected 2"):
            CurveTable("bad", ("a", "b"), ((1.0,),))
        with pytest.raises(ValueError, match="Duplicate"):
            CurveTable("bad", ("a", "a"))

    def test_column_access(self, table: CurveTable) -> None:
        """Test column lookup, selection and max_abs."""
        assert table.column("r")[0] == 0.0
        assert table.max_abs("LN_sp") == 1.0
        assert table.select(["LN_sp"]).columns == ("LN_sp",)
        assert table.select(["LN_sp"]).metadata == table.metadata
        with pytest.raises(KeyError):
            table.column("LN_sa")
        with pytest.raises(KeyError):
            table.select(["r", "missing"])

    def test_with_metadata(self, table: CurveTable) -> None:
        """Test that extra header entries are added as text."""
        extended = table.with_metadata(M=2)
        assert extended.metadata["M"] == "2"
        assert "M" not in table.metadata

    def test_allclose(self, table: CurveTable) -> None:
        """Test tolerance comparison between tables."""
        shifted = CurveTable(
            "sample", table.columns, tuple((r, v + 1e-9) for r, v in table.rows)
        )
        assert table.allclose(shifted, 1e-8)
        assert not table.allclose(shifted, 1e-10)

    def test_output_format_parse(self) -> None:
        """Test format parsing."""
        assert OutputFormat.parse(" JSON ") is OutputFormat.JSON
        with pytest.raises(ValueError, match="Valid"):
            OutputFormat.parse("xlsx")


class TestCombineStack:
    """Tests for joining tables."""

    def test_combine(self, table: CurveTable) -> None:
        """Test side-by-side joining with suffixes."""
        joined = combine("joined", [table, table], ("_M1", "_M2"), {"note": "x"})
        assert joined.columns == ("r", "LN_sp_M1", "LN_sp_M2")
        assert joined.metadata["kind_M2"] == "scalar"
        assert joined.metadata["note"] == "x"

    def test_combine_grid_mismatch(self, table: CurveTable) -> None:
        """Test that tables on different grids are refused."""
        other = CurveTable("other", ("r", "LN_sp"), ((0.5, 0.0),))
        with pytest.raises(ValueError, match="not on the grid"):
            combine("joined", [table, other], ("_a", "_b"))

    def test_stack(self, table: CurveTable) -> None:
        """Test row concatenation."""
        stacked = stack("stacked", [table, table])
        assert len(stacked) == 2 * len(table)
        with pytest.raises(ValueError, match="different columns"):
            stack("bad", [table, table.select(["r"])])


class TestSweepSpec:
    """Tests for sweep definitions."""

    def test_defaults(self) -> None:
        """Test name and kind normalization."""
        spec = SweepSpec("scalar", (0.0, 0.5), "both")
        assert spec.kind is SweepKind.SCALAR
        assert spec.scenario is Scenario.BOTH
        assert spec.name == "scalar_curves"
        assert spec.statistics == "scalar"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": "scalar", "grid": ()},
            {"kind": "scalar", "grid": (1.0,)},
            {"kind": "fermion", "grid": (-0.1,)},
            {"kind": "pairs", "grid": (1.5,)},
            {"kind": "scalar", "grid": (0.1,), "epsilon": 1.0},
            {"kind": "scalar", "grid": (0.1,), "M": 0},
        ],
    )
    def test_invalid(self, kwargs: dict) -> None:
        """Test that out-of-range sweeps raise."""
        with pytest.raises(ParameterDomainError):
            SweepSpec(**kwargs)

    def test_unknown_kind(self) -> None:
        """Test that an unknown kind raises ValueError."""
        with pytest.raises(ValueError, match="Valid"):
            SweepKind.parse("vector")


class TestSweeps:
    """Tests for the sweep functions."""

    def test_fermion_residuals(self) -> None:
        """Test the fermion closed forms and additivity on a 101-point grid."""
        result = fermion_curves(even_grid(0.0, math.pi / 2.0, 101))
        for column in result.columns:
            if column.startswith(("residual_", "additivity_")):
                assert result.max_abs(column) < 1e-10, column
        for column in ("LN_total", "LN_total_both"):
            assert result.column(column) == pytest.approx([1.0] * 101, abs=1e-10)

    def test_fermion_monotone(self) -> None:
        """Test that LN_sp falls and LN_sa rises across the r_f range."""
        result = fermion_curves(even_grid(0.0, math.pi / 2.0, 101))
        ln_sp, ln_sa = result.column("LN_sp"), result.column("LN_sa")
        assert all(a > b for a, b in zip(ln_sp, ln_sp[1:], strict=False))
        assert all(a < b for a, b in zip(ln_sa, ln_sa[1:], strict=False))

    def test_scalar_restricted(self, r_infinite: float) -> None:
        """Test restricted scalar rows against their closed forms."""
        result = scalar_curves([0.0, 0.4, r_infinite], M=1)
        assert result.max_abs("residual_sp") < 1e-10
        assert result.max_abs("residual_sa") < 1e-10
        assert result.column("LN_sa")[-1] == pytest.approx(0.415037, abs=1e-6)
        assert result.metadata["M"] == "1"

    def test_scalar_unrestricted(self, r_infinite: float) -> None:
        """Test unrestricted rows: series agreement and separable antiparticles."""
        result = scalar_curves([0.2, r_infinite])
        assert result.max_abs("residual_sp") < 1e-8
        for ln_sa, bound in zip(
            result.column("LN_sa"), result.column("truncation_error"), strict=True
        ):
            assert ln_sa <= bound + 1e-12
        for ln_total, bound in zip(
            result.column("LN_total"), result.column("truncation_error"), strict=True
        ):
            assert abs(ln_total - 1.0) <= bound + 1e-12
        assert result.metadata["max_cutoff"] == "44"

    def test_scalar_both_unrestricted(self) -> None:
        """Test the both-accelerated columns on a small truncated case."""
        result = scalar_curves([0.5], epsilon=1e-6, scenario="both")
        for column in ("LN_pp", "LN_pa", "LN_ap", "LN_aa", "negativity_gap"):
            assert column in result.columns
        assert 0.0 < result.column("LN_pp")[0] < 1.0
        assert result.column("LN_total_both")[0] == pytest.approx(1.0, abs=1e-4)
        bound = result.column("truncation_error_both")[0]
        for column in ("LN_pa", "LN_ap", "LN_aa"):
            assert result.column(column)[0] <= bound + 1e-12, column

    def test_scalar_both_not_additive(self, r_infinite: float) -> None:
        """Test that species negativities do not sum to the total for bosons."""
        result = scalar_curves([0.3, 0.6, r_infinite], M=1, scenario=Scenario.BOTH)
        assert result.max_abs("negativity_gap") > 1e-6
        assert result.column("LN_pp")[0] > result.column("LN_pp")[-1]

    def test_pairs_scan(self) -> None:
        """Test that LN_sa decays with M and falls below 0.01 at M = 10."""
        result = pairs_scan(range(1, 11))
        ln_sa = result.column("LN_sa")
        assert all(a > b for a, b in zip(ln_sa, ln_sa[1:], strict=False))
        assert ln_sa[0] == pytest.approx(0.415037, abs=1e-6)
        assert ln_sa[-1] < 0.01
        assert result.max_abs("residual_sa") < 1e-10

    def test_worker_count_does_not_change_output(self) -> None:
        """Test identical bytes for one and four workers."""
        serial = pairs_scan(range(1, 5))
        settings = replace(NumericSettings(), workers=4)
        threaded = pairs_scan(range(1, 5), settings=settings)
        assert serial.to_csv() == threaded.to_csv()

    def test_repeatable(self) -> None:
        """Test that repeated runs produce identical text."""
        first = fermion_curves([0.1, 0.9])
        assert first.to_json() == fermion_curves([0.1, 0.9]).to_json()

    def test_schmidt_curve(self) -> None:
        """Test Schmidt numbers against their closed forms."""
        result = schmidt_curve([0.5, 1.0, 2.0])
        assert result.max_abs("residual_plus") < 1e-6
        assert result.max_abs("residual_minus") < 1e-6
        assert result.max_abs("residual_acceleration") < 1e-6
        assert result.column("K_minus_closed") == pytest.approx([2.0] * 3)

    def test_schmidt_curve_at_rest(self) -> None:
        """Test K+ = 1 at v_tilde = 0 with the K- columns left undefined."""
        result = schmidt_curve([0.0, 1.0])
        assert result.column("K_plus_closed")[0] == pytest.approx(1.0)
        assert result.column("K_plus_numeric")[0] == pytest.approx(1.0, abs=1e-6)
        assert math.isnan(result.column("K_minus_numeric")[0])
        assert math.isnan(result.column("K_minus_closed")[0])
        assert result.column("K_minus_closed")[1] == 2.0

    def test_schmidt_curve_negative_grid(self) -> None:
        """Test that a negative v_tilde is refused."""
        with pytest.raises(ParameterDomainError, match="parameter"):
            schmidt_curve([-0.5, 1.0])

    def test_spectra_curve(self) -> None:
        """Test the sinh(r)**2 identity on every row."""
        result = spectra_curve([0.1, 1.0, 10.0], m=1.0, omega=1.0)
        assert result.max_abs("identity_residual") <= 1e-14
        assert result.metadata["accelerated_form"] == "exp(-pi*m/a)"
        s_acc = result.column("S_accelerated")
        assert s_acc == sorted(s_acc)

    def test_packet_grid(self) -> None:
        """Test the grid layout with y varying fastest."""
        result = packet_grid(TwoBodyParams(v1=-1.0, v2=1.0), 0.0, points=5)
        assert result.columns == ("t", "x", "y", "abs_psi")
        assert len(result) == 25
        xs, ys = result.column("x"), result.column("y")
        assert xs[0] == xs[4] and ys[0] != ys[1]
        assert min(result.column("abs_psi")) >= 0.0


class TestRestrictedScalar:
    """Tests for restricted scalar rows with both modes accelerated."""

    @pytest.fixture(params=[1, 2], ids=["M1", "M2"])
    def both(self, request: pytest.FixtureRequest, r_infinite: float) -> CurveTable:
        """Both-accelerated restricted rows on an increasing r grid."""
        return scalar_curves(
            [0.0, 0.3, 0.6, r_infinite], M=request.param, scenario=Scenario.BOTH
        )

    def test_cross_species_symmetry(self, both: CurveTable) -> None:
        """Test LN_pa = LN_ap when both modes share r."""
        for pa, ap in zip(both.column("LN_pa"), both.column("LN_ap"), strict=True):
            assert abs(pa - ap) <= 1e-12

    def test_monotone_in_r(self, both: CurveTable) -> None:
        """Test that LN_pp falls while LN_pa and LN_aa rise with r."""
        ln_pp = both.column("LN_pp")
        assert all(a > b for a, b in zip(ln_pp, ln_pp[1:], strict=False))
        for column in ("LN_pa", "LN_aa"):
            values = both.column(column)
            assert all(a < b for a, b in zip(values, values[1:], strict=False))

    def test_total_within_bound(self, both: CurveTable) -> None:
        """Test that the total stays at one within the recorded bound."""
        for ln_total, bound in zip(
            both.column("LN_total_both"),
            both.column("truncation_error_both"),
            strict=True,
        ):
            assert abs(ln_total - 1.0) <= bound + 1e-10
        assert both.column("LN_total") == pytest.approx([1.0] * 4, abs=1e-10)

    @pytest.mark.parametrize("M", [1, 2, 5])
    def test_amplitude_ratio(self, M: int) -> None:
        """Test restricted over unrestricted amplitudes is N1 or N2 for every n."""
        r = 0.4
        params = restriction_params(r, M)
        pairs = (
            (scalar_restricted_vacuum(r, M), scalar_out_vacuum(r), params.N1),
            (scalar_restricted_one(r, M), scalar_out_one(r), params.N2),
        )
        for restricted, full, factor in pairs:
            ratios = [
                amplitude / full.amplitudes[key]
                for key, amplitude in restricted.amplitudes.items()
            ]
            assert ratios
            assert ratios == pytest.approx([factor] * len(ratios), rel=1e-12)


class TestSweepFiles:
    """Tests for YAML sweep definitions."""

    def test_bundled_files(self) -> None:
        """Test that every bundled sweep file loads."""
        files = sorted(SWEEPS_DIR.glob("*.yaml"))
        assert files
        for path in files:
            assert load_sweep(path).grid

    def test_pairs_file(self, sweep_file: Path) -> None:
        """Test a pairs sweep end to end."""
        spec = load_sweep(sweep_file)
        assert spec.kind is SweepKind.PAIRS
        assert spec.grid == (1.0, 2.0, 3.0)
        result = run_sweep(spec)
        assert result.name == "pairs_small"
        assert len(result) == 3

    def test_list_grid(self, tmp_path: Path) -> None:
        """Test an explicit list of grid values and the max keyword."""
        path = tmp_path / "fermion.yaml"
        path.write_text("kind: fermion\ngrid: [0.0, 0.5]\n")
        spec = load_sweep(path)
        assert spec.grid == (0.0, 0.5)
        assert spec.name == "fermion"
        path.write_text("kind: scalar\ngrid:\n  stop: max\n  points: 3\n")
        assert load_sweep(path).grid[-1] == pytest.approx(math.asinh(1.0))

    @pytest.mark.parametrize(
        "text",
        [
            "- 1\n- 2\n",
            "kind: tensor\ngrid: [0.1]\n",
            "kind: pairs\ngrid:\n  start: 1\n  stop: max\n",
            "kind: scalar\ngrid: [2.0]\n",
            "kind: scalar\ngrid: 3\n",
        ],
    )
    def test_invalid_files(self, tmp_path: Path, text: str) -> None:
        """Test that malformed files raise ParameterDomainError."""
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        with pytest.raises(ParameterDomainError):
            load_sweep(path)


class TestFigures:
    """Tests for the figure registry."""

    def test_registry(self) -> None:
        """Test the registered figure identifiers."""
        assert set(FIGURES) == {
            "bfacc",
            "enb_1",
            "encp_1",
            "nop_tp",
            "bsacc_1",
            "bsacc_2",
            "schno",
            "accwp_0",
            "accwp_2",
        }

    def test_unknown_figure(self) -> None:
        """Test that an unknown identifier lists the valid ones."""
        with pytest.raises(ValueError, match="Valid"):
            build_figure("fig_99")

    def test_write_one_figure(self, tmp_path: Path) -> None:
        """Test writing a single figure with a progress callback."""
        seen: list[Path] = []
        written = write_figures(
            tmp_path / "out", "csv", figure_ids=["nop_tp"], on_written=seen.append
        )
        assert written == seen == [tmp_path / "out" / "nop_tp.csv"]
        parsed = CurveTable.from_csv(written[0].read_text())
        assert len(parsed) == 10
        assert parsed.metadata["kind"] == "pairs"

    def test_write_all_figures(self, tmp_path: Path) -> None:
        """Test that every registered figure is written, on reduced grids."""
        settings = replace(
            NumericSettings(),
            epsilon=1e-6,
            grid_points=3,
            coarse_grid_points=2,
            schmidt_grid_points=2,
        )
        written = write_figures(tmp_path, "csv", settings=settings)
        assert [p.name for p in written] == [f"{f}.csv" for f in FIGURES]
        for path in written:
            assert len(CurveTable.from_csv(path.read_text())) > 0, path.name
        enb_1 = CurveTable.from_csv((tmp_path / "enb_1.csv").read_text())
        assert len(enb_1) == 2
        assert enb_1.metadata["epsilon"] == "1e-06"
